#include "loophom/hilbert.hpp"

#include <sstream>

namespace loophom {

void HilbertSeries::require_same_bound(const HilbertSeries& other) const {
    if (bound() != other.bound())
        throw BoundError("series bounds differ: " + std::to_string(bound()) + " vs " +
                         std::to_string(other.bound()));
}

HilbertSeries& HilbertSeries::mul_one_plus(int d) {
    for (int i = bound(); i >= d; --i)
        coeff_[i] += coeff_[i - d];
    return *this;
}

HilbertSeries& HilbertSeries::mul_one_minus(int d) {
    for (int i = bound(); i >= d; --i)
        coeff_[i] -= coeff_[i - d];
    return *this;
}

HilbertSeries& HilbertSeries::div_one_minus(int d) {
    for (int i = d; i <= bound(); ++i)
        coeff_[i] += coeff_[i - d];
    return *this;
}

HilbertSeries HilbertSeries::operator*(const HilbertSeries& other) const {
    require_same_bound(other);
    HilbertSeries r(bound());
    for (int i = 0; i <= bound(); ++i) {
        if (coeff_[i] == 0)
            continue;
        for (int j = 0; i + j <= bound(); ++j)
            r.coeff_[i + j] += coeff_[i] * other.coeff_[j];
    }
    return r;
}

bool HilbertSeries::operator==(const HilbertSeries& other) const {
    require_same_bound(other);
    return coeff_ == other.coeff_;
}

std::optional<int> HilbertSeries::first_mismatch(const HilbertSeries& other) const {
    require_same_bound(other);
    for (int d = 0; d <= bound(); ++d)
        if (coeff_[d] != other.coeff_[d])
            return d;
    return std::nullopt;
}

std::string HilbertSeries::to_string() const {
    std::ostringstream os;
    for (int d = 0; d <= bound(); ++d) {
        if (d)
            os << ",";
        os << coeff_[d];
    }
    return os.str();
}

HilbertSeries free_graded_series(const std::vector<GradedGenerator>& gens, int bound) {
    HilbertSeries s = HilbertSeries::one(bound);
    for (const auto& g : gens) {
        if (g.degree < 1)
            throw GradingError("generator '" + g.name + "' must have degree >= 1");
        if (g.odd())
            s.mul_one_plus(g.degree);
        else
            s.div_one_minus(g.degree);
    }
    return s;
}

HilbertSeries complete_intersection_series(const std::vector<int>& var_degrees,
                                           const std::vector<int>& rel_degrees,
                                           const std::vector<int>& ext_degrees,
                                           int bound) {
    HilbertSeries s = HilbertSeries::one(bound);
    for (int d : var_degrees)
        s.div_one_minus(d);
    for (int d : rel_degrees)
        s.mul_one_minus(d);
    for (int d : ext_degrees)
        s.mul_one_plus(d);
    return s;
}

} // namespace loophom
