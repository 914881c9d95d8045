#pragma once

#include "loophom/generators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loophom {

// Truncated power series with integer coefficients, indexed 0..bound.
// Operations between two series require equal bounds.
class HilbertSeries {
public:
    explicit HilbertSeries(int bound) : coeff_(static_cast<std::size_t>(bound) + 1, 0) {
        if (bound < 0)
            throw BoundError("series bound must be >= 0");
    }

    static HilbertSeries one(int bound) {
        HilbertSeries s(bound);
        s.coeff_[0] = 1;
        return s;
    }

    int bound() const { return static_cast<int>(coeff_.size()) - 1; }
    long long operator[](int d) const { return coeff_[static_cast<std::size_t>(d)]; }
    long long& at(int d) { return coeff_[static_cast<std::size_t>(d)]; }
    const std::vector<long long>& coefficients() const { return coeff_; }

    HilbertSeries& mul_one_plus(int d);    // *(1 + t^d)
    HilbertSeries& mul_one_minus(int d);   // *(1 - t^d)
    HilbertSeries& div_one_minus(int d);   // *(1 - t^d)^{-1}

    HilbertSeries operator*(const HilbertSeries& other) const;
    bool operator==(const HilbertSeries& other) const;
    bool operator!=(const HilbertSeries& other) const { return !(*this == other); }

    // First degree where the two series differ, if any.
    std::optional<int> first_mismatch(const HilbertSeries& other) const;

    std::string to_string() const;

private:
    void require_same_bound(const HilbertSeries& other) const;
    std::vector<long long> coeff_;
};

// Graded dimensions of the free graded-commutative algebra on `gens`:
// one (1 + t^d) factor per odd generator, one (1 - t^d)^{-1} per even one.
HilbertSeries free_graded_series(const std::vector<GradedGenerator>& gens, int bound);

// Prod_j (1 - t^relDeg_j) * Prod_i (1 - t^varDeg_i)^{-1} * Prod_k (1 + t^extDeg_k).
HilbertSeries complete_intersection_series(const std::vector<int>& var_degrees,
                                           const std::vector<int>& rel_degrees,
                                           const std::vector<int>& ext_degrees,
                                           int bound);

} // namespace loophom
