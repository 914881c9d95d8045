#pragma once

#include "loophom/envelope.hpp"
#include "loophom/polynomial.hpp"

#include <vector>

namespace loophom {

// Entries indexed 1..m (stored from 0).  Formal vectors hold polynomials in
// symbolic entries; numeric vectors hold constants over an empty context.
struct SymmetricFunctionVector {
    enum class Basis { PowerSum, Generator };  // sigma_k vs y_k
    Basis basis = Basis::Generator;
    std::vector<Polynomial> entries;

    std::size_t size() const { return entries.size(); }
};

// Formal vector whose k-th entry is the variable y_k (degree 2k).
SymmetricFunctionVector formal_generator_vector(std::size_t m);
// Formal vector whose k-th entry is the variable sigma_k (degree 2k).
SymmetricFunctionVector formal_power_sum_vector(std::size_t m);
// Constant entries over the empty context.
SymmetricFunctionVector numeric_vector(SymmetricFunctionVector::Basis basis,
                                       const std::vector<Rational>& values);

// sigma_k = sum_{i=1}^{k-1} (-1)^{i-1} sigma_{k-i} y_i + (-1)^{k-1} k y_k.
SymmetricFunctionVector newton_sigma_from_y(const SymmetricFunctionVector& y);

// Inverse recursion; divides by k, so an integer-ring request is refused.
SymmetricFunctionVector newton_y_from_sigma(const SymmetricFunctionVector& sigma,
                                            CoefficientRing ring = CoefficientRing::Rational);

} // namespace loophom
