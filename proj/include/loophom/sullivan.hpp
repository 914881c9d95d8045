#pragma once

#include "loophom/presentation.hpp"

#include <map>
#include <utility>
#include <vector>

namespace loophom {

// The fragment of the minimal model of a formal space that determines its
// homotopy Lie algebra: even cocycles u, odd relation-killers v with
// d(v_j) = relation_j, and odd cocycles z.
struct ModelFragment {
    PolyContextPtr u_ctx;                 // the u-generators as a polynomial context
    std::vector<GradedGenerator> v;       // deg v_j = deg(relation_j) - 1
    std::vector<GradedGenerator> z;
    std::vector<Polynomial> d_v;          // differential images, in u_ctx

    std::size_t generator_count() const { return u_ctx->size() + v.size() + z.size(); }
    // Global indexing [u..., v..., z...] shared with the dual Lie basis.
    const GradedGenerator& generator(std::size_t i) const;
};

ModelFragment build_formal_model(const CohomPresentation& pres);

// Word-length-2 components of d(v_j); zero entries retained.
std::vector<Polynomial> quadratic_part(const ModelFragment& m);

// The multilinear suspension pairing.  `letters` spell a word in model
// generators (global indices); `duals` name the suspended dual arguments,
// also by global index.  Base pairing: <g; s(dual of g)> = (-1)^{deg g}.
Rational pairing_eval(const ModelFragment& m,
                      const std::vector<std::size_t>& letters,
                      const std::vector<std::size_t>& duals);

// Linear extension over a polynomial in the u-generators.  Every monomial
// must have word length equal to the argument count.
Rational pairing_eval(const ModelFragment& m,
                      const Polynomial& word,
                      const std::vector<std::size_t>& duals);

// Homotopy Lie algebra on the dual basis: a_i over u, b_j over v, c_k over z,
// in homological degree (model degree - 1).
struct LieAlgebraData {
    std::vector<GradedGenerator> basis;
    std::size_t n_a = 0, n_b = 0, n_c = 0;
    // sparse structure constants: (k,l) -> sum of coeff * basis element
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
        brackets;

    const std::vector<std::pair<std::size_t, Rational>>* bracket(std::size_t k, std::size_t l) const;
    Rational structure_constant(std::size_t k, std::size_t l, std::size_t m) const;

    bool degree_additive() const;
    bool antisymmetry_holds() const;
    bool jacobi_holds() const;
};

// Reads the structure constants off the quadratic part:
// the coefficient of (dual of v) on [x, y] is (-1)^{deg y + 1} <d1 v; sx, sy>.
// Brackets not forced by d1 are zero.
LieAlgebraData homotopy_lie(const ModelFragment& m);

} // namespace loophom
