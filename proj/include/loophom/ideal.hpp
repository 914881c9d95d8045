#pragma once

#include "loophom/hilbert.hpp"
#include "loophom/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace loophom {

// A commutative ideal together with its (optionally degree-truncated)
// reduced Groebner basis.  Basis elements are monic and inter-reduced.
struct IdealBasis {
    PolyContextPtr ctx;
    std::vector<Polynomial> generators;
    MonomialOrder order = MonomialOrder::GradedRevLex;
    std::vector<Polynomial> groebner;
    std::optional<int> degree_bound;  // topological truncation used, if any

    bool computed() const { return !groebner.empty() || generators.empty(); }
};

// Buchberger with the product and chain criteria.  With a degree bound,
// S-pairs whose lcm exceeds the bound are discarded; the result then has
// the correct leading terms up to that degree (enough for counting and
// for membership of elements below the bound).
IdealBasis groebner_basis(std::vector<Polynomial> gens,
                          MonomialOrder order = MonomialOrder::GradedRevLex,
                          std::optional<int> degree_bound = std::nullopt);

Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal);

bool is_member(const Polynomial& p, const IdealBasis& ideal);

// Number of standard monomials (normal forms) in each topological degree 0..bound.
std::vector<long long> quotient_dimensions(const IdealBasis& ideal, int bound);

// Default verification bound: sum of relation degrees plus the largest
// generator degree; beyond the socle of a complete intersection nothing moves.
int regular_sequence_bound(const PolyContext& ctx, const std::vector<Polynomial>& seq);

// Hilbert-series criterion: the quotient dimensions up to the bound must
// equal the complete-intersection prediction for the given degrees.
bool is_regular_sequence(const PolyContextPtr& ambient,
                         const std::vector<Polynomial>& seq,
                         std::optional<int> bound = std::nullopt);

struct CartanReduction {
    // Surviving relations with their original input positions, expressed in
    // the reduced ambient context.
    std::vector<std::pair<std::size_t, Polynomial>> regular;
    // One odd degree 2k-1 per invariant of degree 2k whose restriction
    // vanished or fell into the ideal of the accepted ones.
    std::vector<int> exterior_degrees;
    // Generators absorbed by linear (degree-2) restrictions.
    std::vector<std::string> eliminated_linear;
    PolyContextPtr reduced_ctx;
};

// Greedy scan of restricted invariants in ascending degree.  Each entry is
// (restriction, degree of the unrestricted invariant).  Ends by certifying
// the accepted list with is_regular_sequence; throws NotCartanPairError
// if the certificate fails.
CartanReduction cartan_reduce(const std::vector<std::pair<Polynomial, int>>& restricted,
                              const PolyContextPtr& ambient);

} // namespace loophom
