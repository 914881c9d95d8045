#include "loophom/sullivan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace loophom {

void validate(const CohomPresentation& pres) {
    std::set<std::string> names;
    for (const auto& g : pres.ctx->gens())
        names.insert(g.name);
    for (const auto& g : pres.exterior) {
        if (!g.odd())
            throw GradingError("exterior generator '" + g.name + "' must have odd degree");
        if (!names.insert(g.name).second)
            throw SemanticError("duplicate generator name '" + g.name + "'");
    }
    for (const auto& r : pres.relations) {
        if (!same_context(r.context(), pres.ctx))
            throw ContextError("relation outside the presentation context");
        if (r.is_zero())
            throw SemanticError("zero relation in presentation");
        if (!r.is_homogeneous())
            throw GradingError("relation '" + r.to_string() + "' is inhomogeneous");
    }
}

const GradedGenerator& ModelFragment::generator(std::size_t i) const {
    std::size_t nu = u_ctx->size();
    if (i < nu)
        return u_ctx->gen(i);
    if (i < nu + v.size())
        return v[i - nu];
    return z[i - nu - v.size()];
}

ModelFragment build_formal_model(const CohomPresentation& pres) {
    validate(pres);
    ModelFragment m;
    m.u_ctx = pres.ctx;
    for (std::size_t j = 0; j < pres.relations.size(); ++j) {
        const Polynomial& r = pres.relations[j];
        if (r.degree() < 4)
            throw ReductionError("relation '" + r.to_string() +
                                 "' is linear in a generator and must be eliminated upstream");
        m.v.push_back({"v" + std::to_string(j + 1), r.degree() - 1});
        m.d_v.push_back(r);
    }
    m.z = pres.exterior;
    return m;
}

std::vector<Polynomial> quadratic_part(const ModelFragment& m) {
    std::vector<Polynomial> d1;
    d1.reserve(m.d_v.size());
    for (const auto& dv : m.d_v)
        d1.push_back(dv.word_length_component(2));
    return d1;
}

namespace {

// Koszul sign of reordering (letters[0], ..., letters[k-1]) into
// (letters[perm[0]], ..., letters[perm[k-1]]).
int koszul_sign(const ModelFragment& m, const std::vector<std::size_t>& letters,
                const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t p = 0; p < perm.size(); ++p)
        for (std::size_t q = p + 1; q < perm.size(); ++q)
            if (perm[p] > perm[q]) {
                int dp = m.generator(letters[perm[p]]).degree;
                int dq = m.generator(letters[perm[q]]).degree;
                if ((dp % 2) && (dq % 2))
                    sign = -sign;
            }
    return sign;
}

int base_pairing(const ModelFragment& m, std::size_t letter, std::size_t dual) {
    if (letter != dual)
        return 0;
    return m.generator(letter).degree % 2 ? -1 : 1;
}

} // namespace

Rational pairing_eval(const ModelFragment& m, const std::vector<std::size_t>& letters,
                      const std::vector<std::size_t>& duals) {
    if (letters.size() != duals.size())
        throw ArityError("word length " + std::to_string(letters.size()) + " paired with " +
                         std::to_string(duals.size()) + " arguments");
    const std::size_t k = letters.size();
    // a repeated odd letter spells the zero element
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (letters[i] == letters[j] && m.generator(letters[i]).odd())
                return 0;

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        // slot j of the displayed pairing takes the (k - j)-th argument
        int prod = 1;
        for (std::size_t j = 0; j < k && prod; ++j)
            prod *= base_pairing(m, letters[perm[j]], duals[k - 1 - j]);
        if (prod)
            total += prod * koszul_sign(m, letters, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rational pairing_eval(const ModelFragment& m, const Polynomial& word,
                      const std::vector<std::size_t>& duals) {
    Rational total = 0;
    for (const auto& [mono, coeff] : word.terms()) {
        if (mono.word_length() != duals.size())
            throw ArityError("monomial of word length " + std::to_string(mono.word_length()) +
                             " paired with " + std::to_string(duals.size()) + " arguments");
        std::vector<std::size_t> letters;
        for (std::size_t i = 0; i < mono.nvars(); ++i)
            for (unsigned e = 0; e < mono.exp(i); ++e)
                letters.push_back(i);  // u-generators share the global index prefix
        total += coeff * pairing_eval(m, letters, duals);
    }
    return total;
}

const std::vector<std::pair<std::size_t, Rational>>* LieAlgebraData::bracket(std::size_t k,
                                                                             std::size_t l) const {
    auto it = brackets.find({k, l});
    return it == brackets.end() ? nullptr : &it->second;
}

Rational LieAlgebraData::structure_constant(std::size_t k, std::size_t l, std::size_t m) const {
    if (const auto* b = bracket(k, l))
        for (const auto& [idx, c] : *b)
            if (idx == m)
                return c;
    return 0;
}

bool LieAlgebraData::degree_additive() const {
    for (const auto& [kl, value] : brackets)
        for (const auto& [m, c] : value)
            if (c != 0 &&
                basis[m].degree != basis[kl.first].degree + basis[kl.second].degree)
                return false;
    return true;
}

bool LieAlgebraData::antisymmetry_holds() const {
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t l = 0; l < basis.size(); ++l) {
            int sign = (basis[k].degree % 2) && (basis[l].degree % 2) ? 1 : -1;
            // [x,y] = -(-1)^{deg x deg y} [y,x]
            for (std::size_t m = 0; m < basis.size(); ++m)
                if (structure_constant(k, l, m) != sign * structure_constant(l, k, m))
                    return false;
        }
    return true;
}

bool LieAlgebraData::jacobi_holds() const {
    const std::size_t n = basis.size();
    auto bracket_with = [&](std::size_t x, const std::vector<std::pair<std::size_t, Rational>>& val,
                            std::size_t target) {
        Rational sum = 0;
        for (const auto& [m, c] : val)
            sum += c * structure_constant(x, m, target);
        return sum;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                int dx = basis[x].degree, dy = basis[y].degree, dz = basis[z].degree;
                auto sgn = [](int a, int b) { return (a % 2) && (b % 2) ? -1 : 1; };
                for (std::size_t t = 0; t < n; ++t) {
                    Rational sum = 0;
                    if (const auto* yz = bracket(y, z))
                        sum += sgn(dx, dz) * bracket_with(x, *yz, t);
                    if (const auto* zx = bracket(z, x))
                        sum += sgn(dy, dx) * bracket_with(y, *zx, t);
                    if (const auto* xy = bracket(x, y))
                        sum += sgn(dz, dy) * bracket_with(z, *xy, t);
                    if (sum != 0)
                        return false;
                }
            }
    return true;
}

LieAlgebraData homotopy_lie(const ModelFragment& m) {
    LieAlgebraData L;
    L.n_a = m.u_ctx->size();
    L.n_b = m.v.size();
    L.n_c = m.z.size();
    for (std::size_t i = 0; i < L.n_a; ++i)
        L.basis.push_back({"a" + std::to_string(i + 1), m.u_ctx->gen(i).degree - 1});
    for (std::size_t j = 0; j < L.n_b; ++j)
        L.basis.push_back({"b" + std::to_string(j + 1), m.v[j].degree - 1});
    for (std::size_t k = 0; k < L.n_c; ++k)
        L.basis.push_back({"c" + std::to_string(k + 1), m.z[k].degree - 1});

    std::vector<Polynomial> d1 = quadratic_part(m);
    // only duals of u-generators can pair against words in the u's
    for (std::size_t x = 0; x < L.n_a; ++x)
        for (std::size_t y = 0; y < L.n_a; ++y) {
            std::vector<std::pair<std::size_t, Rational>> value;
            for (std::size_t j = 0; j < d1.size(); ++j) {
                if (d1[j].is_zero())
                    continue;
                Rational c = pairing_eval(m, d1[j], {x, y});
                if (L.basis[y].degree % 2 == 0)
                    c = -c;  // (-1)^{deg y + 1}
                if (c != 0)
                    value.emplace_back(L.n_a + j, c);
            }
            if (!value.empty())
                L.brackets.emplace(std::make_pair(x, y), std::move(value));
        }
    return L;
}

} // namespace loophom
