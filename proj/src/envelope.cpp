#include "loophom/envelope.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace loophom {

int word_degree(const NCContext& ctx, const Word& w) {
    int d = 0;
    for (auto i : w)
        d += ctx.gen(i).degree;
    return d;
}

std::string word_to_string(const NCContext& ctx, const Word& w) {
    if (w.empty())
        return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t run = i;
        while (run < w.size() && w[run] == w[i])
            ++run;
        if (!first)
            os << "*";
        os << ctx.gen(w[i]).name;
        if (run - i > 1)
            os << "^" << (run - i);
        first = false;
        i = run;
    }
    return os.str();
}

int compare_words(const NCContext& ctx, const Word& a, const Word& b) {
    int da = word_degree(ctx, a), db = word_degree(ctx, b);
    if (da != db)
        return da < db ? -1 : 1;
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

NCPoly::NCPoly(NCContextPtr ctx) : ctx_(std::move(ctx)), terms_(WordLess{ctx_.get()}) {}

NCPoly NCPoly::term(NCContextPtr ctx, Word w, Rational c) {
    NCPoly p(std::move(ctx));
    if (c != 0)
        p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

NCPoly NCPoly::generator(NCContextPtr ctx, std::size_t i) {
    return term(std::move(ctx), Word{static_cast<std::uint32_t>(i)});
}

int NCPoly::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_)
        d = std::max(d, word_degree(*ctx_, w));
    return d;
}

bool NCPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = word_degree(*ctx_, terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (word_degree(*ctx_, w) != d)
            return false;
    return true;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r(ctx_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r(a.ctx_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second)
            return false;
    return true;
}

std::string NCPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (w.empty())
            os << loophom::to_string(abs_c);
        else {
            if (abs_c != 1)
                os << loophom::to_string(abs_c) << "*";
            os << word_to_string(*ctx_, w);
        }
        first = false;
    }
    return os.str();
}

NCPresentation make_presentation(NCContextPtr ctx, std::vector<NCPoly> relations,
                                 CoefficientRing ring) {
    NCPresentation p;
    p.ctx = std::move(ctx);
    p.ring = ring;
    for (auto& r : relations) {
        if (r.is_zero())
            continue;
        if (!r.is_homogeneous())
            throw GradingError("relation '" + r.to_string() + "' is inhomogeneous");
        if (ring == CoefficientRing::Integer)
            for (const auto& [w, c] : r.terms())
                if (!is_integer(c))
                    throw NonintegralDivisionError("integer presentation with coefficient " +
                                                   loophom::to_string(c));
        p.relations.push_back(std::move(r));
    }
    return p;
}

namespace {

void add_rule(NCPresentation& p, const NCPoly& r) {
    const Word lhs = r.leading_word();
    if (lhs.empty())
        throw OrientationError("relation reduces to a nonzero constant");
    Rational c = r.leading_coeff();
    NCPoly rhs = NCPoly::term(p.ctx, lhs) - r * (Rational(1) / c);
    for (const auto& [w, cw] : rhs.terms())
        if (compare_words(*p.ctx, w, lhs) >= 0)
            throw OrientationError("rule tail does not drop below its head");
    p.rules.push_back({lhs, std::move(rhs)});
}

bool subword_at(const Word& w, const Word& pattern, std::size_t pos) {
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (w[pos + i] != pattern[i])
            return false;
    return true;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
                w.begin() + static_cast<std::ptrdiff_t>(to));
}

NCPoly wrap(const NCContextPtr& ctx, const Word& prefix, const NCPoly& mid, const Word& suffix) {
    NCPoly out(ctx);
    for (const auto& [w, c] : mid.terms()) {
        Word full = prefix;
        full.insert(full.end(), w.begin(), w.end());
        full.insert(full.end(), suffix.begin(), suffix.end());
        out.add_term(full, c);
    }
    return out;
}

// Critical pairs of (a, b): proper overlaps (a suffix of a.lhs equals a
// prefix of b.lhs) and containments of b.lhs inside a.lhs.
template <typename F>
void for_each_overlap(const NCPresentation& p, std::size_t ia, std::size_t ib, F&& emit) {
    const auto& A = p.rules[ia];
    const auto& B = p.rules[ib];
    const std::size_t la = A.lhs.size(), lb = B.lhs.size();
    for (std::size_t t = 1; t < std::min(la, lb); ++t) {
        if (!subword_at(A.lhs, slice(B.lhs, 0, t), la - t))
            continue;
        Word w = A.lhs;
        w.insert(w.end(), B.lhs.begin() + static_cast<std::ptrdiff_t>(t), B.lhs.end());
        NCPoly p1 = wrap(p.ctx, {}, A.rhs, slice(B.lhs, t, lb));
        NCPoly p2 = wrap(p.ctx, slice(A.lhs, 0, la - t), B.rhs, {});
        emit(w, std::move(p1), std::move(p2));
    }
    if (ia != ib && lb <= la) {
        for (std::size_t pos = 0; pos + lb <= la; ++pos) {
            if (!subword_at(A.lhs, B.lhs, pos))
                continue;
            NCPoly p1 = A.rhs;
            NCPoly p2 = wrap(p.ctx, slice(A.lhs, 0, pos), B.rhs, slice(A.lhs, pos + lb, la));
            emit(A.lhs, std::move(p1), std::move(p2));
        }
    }
}

} // namespace

NCPoly nc_normal_form(const NCPresentation& p, NCPoly q) {
    NCPoly result(p.ctx);
    while (!q.is_zero()) {
        const Word w = q.leading_word();
        const Rational c = q.leading_coeff();
        std::size_t best_rule = p.rules.size();
        std::size_t best_pos = 0;
        for (std::size_t r = 0; r < p.rules.size(); ++r) {
            const Word& lhs = p.rules[r].lhs;
            if (lhs.size() > w.size())
                continue;
            for (std::size_t pos = 0; pos + lhs.size() <= w.size(); ++pos) {
                if (!subword_at(w, lhs, pos))
                    continue;
                if (best_rule == p.rules.size() || pos < best_pos) {
                    best_rule = r;
                    best_pos = pos;
                }
                break;
            }
        }
        if (best_rule == p.rules.size()) {
            result.add_term(w, c);
            q.add_term(w, -c);
        } else {
            const auto& rule = p.rules[best_rule];
            NCPoly repl = wrap(p.ctx, slice(w, 0, best_pos), rule.rhs,
                               slice(w, best_pos + rule.lhs.size(), w.size()));
            q.add_term(w, -c);
            q += repl * c;
        }
    }
    return result;
}

void complete(NCPresentation& p, int bound) {
    if (p.completed_to >= bound)
        return;
    p.rules.clear();
    for (const auto& rel : p.relations) {
        NCPoly q = nc_normal_form(p, rel);
        if (!q.is_zero())
            add_rule(p, q);
    }
    std::deque<std::pair<std::size_t, std::size_t>> agenda;
    for (std::size_t i = 0; i < p.rules.size(); ++i)
        for (std::size_t j = 0; j < p.rules.size(); ++j)
            agenda.push_back({i, j});
    while (!agenda.empty()) {
        auto [i, j] = agenda.front();
        agenda.pop_front();
        for_each_overlap(p, i, j, [&](const Word& w, NCPoly p1, NCPoly p2) {
            if (word_degree(*p.ctx, w) > bound)
                return;
            NCPoly diff = nc_normal_form(p, p1 - p2);
            if (diff.is_zero())
                return;
            add_rule(p, diff);
            std::size_t t = p.rules.size() - 1;
            for (std::size_t s = 0; s <= t; ++s) {
                agenda.push_back({s, t});
                if (s != t)
                    agenda.push_back({t, s});
            }
        });
    }
    p.completed_to = bound;
}

bool check_confluence(const NCPresentation& p, int bound) {
    for (std::size_t i = 0; i < p.rules.size(); ++i)
        for (std::size_t j = 0; j < p.rules.size(); ++j) {
            bool ok = true;
            for_each_overlap(p, i, j, [&](const Word& w, NCPoly p1, NCPoly p2) {
                if (word_degree(*p.ctx, w) > bound)
                    return;
                if (nc_normal_form(p, p1) != nc_normal_form(p, p2))
                    ok = false;
            });
            if (!ok)
                return false;
        }
    return true;
}

std::vector<std::vector<Word>> normal_basis(NCPresentation& p, int bound) {
    complete(p, bound);
    std::vector<std::vector<Word>> basis(static_cast<std::size_t>(bound) + 1);
    basis[0].push_back({});
    for (int d = 1; d <= bound; ++d) {
        for (std::size_t g = 0; g < p.ctx->size(); ++g) {
            int dg = p.ctx->gen(g).degree;
            if (dg > d)
                continue;
            for (const Word& w : basis[static_cast<std::size_t>(d - dg)]) {
                Word w2 = w;
                w2.push_back(static_cast<std::uint32_t>(g));
                bool reducible = false;
                for (const auto& rule : p.rules) {
                    const std::size_t l = rule.lhs.size();
                    if (l > w2.size())
                        continue;
                    if (subword_at(w2, rule.lhs, w2.size() - l)) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible)
                    basis[static_cast<std::size_t>(d)].push_back(std::move(w2));
            }
        }
    }
    return basis;
}

std::vector<long long> normal_basis_counts(NCPresentation& p, int bound) {
    auto basis = normal_basis(p, bound);
    std::vector<long long> counts(basis.size());
    for (std::size_t d = 0; d < basis.size(); ++d)
        counts[d] = static_cast<long long>(basis[d].size());
    return counts;
}

HilbertSeries nc_series(NCPresentation& p, int bound) {
    auto counts = normal_basis_counts(p, bound);
    HilbertSeries s(bound);
    for (int d = 0; d <= bound; ++d)
        s.at(d) = counts[static_cast<std::size_t>(d)];
    return s;
}

HilbertSeries pbw_series(const LieAlgebraData& L, int bound) {
    return free_graded_series(L.basis, bound);
}

ComparisonReport verify_presentation(NCPresentation& p, const HilbertSeries& expected, int bound) {
    if (expected.bound() < bound)
        throw BoundError("expected series bound below the comparison bound");
    ComparisonReport rep;
    rep.lhs = normal_basis_counts(p, bound);
    for (int d = 0; d <= bound; ++d)
        rep.rhs.push_back(expected[d]);
    rep.match = true;
    for (int d = 0; d <= bound; ++d)
        if (rep.lhs[static_cast<std::size_t>(d)] != rep.rhs[static_cast<std::size_t>(d)]) {
            rep.match = false;
            rep.mismatch_degree = d;
            break;
        }
    return rep;
}

ComparisonReport rank_compare(NCPresentation& integral, NCPresentation& rational, int bound) {
    ComparisonReport rep;
    rep.lhs = normal_basis_counts(integral, bound);
    rep.rhs = normal_basis_counts(rational, bound);
    rep.match = true;
    for (int d = 0; d <= bound; ++d)
        if (rep.lhs[static_cast<std::size_t>(d)] != rep.rhs[static_cast<std::size_t>(d)]) {
            rep.match = false;
            rep.mismatch_degree = d;
            break;
        }
    return rep;
}

namespace {

Word w1(std::size_t a) { return {static_cast<std::uint32_t>(a)}; }
Word w2(std::size_t a, std::size_t b) {
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

} // namespace

NCPresentation enveloping(const LieAlgebraData& L, bool eliminate_central, int prune_bound) {
    if (!L.degree_additive())
        throw InvalidLieError("structure constants violate degree additivity");
    if (!L.antisymmetry_holds())
        throw InvalidLieError("structure constants violate graded antisymmetry");
    if (!L.jacobi_holds())
        throw InvalidLieError("structure constants violate the graded Jacobi identity");

    const std::size_t m = L.basis.size();
    auto odd = [&](std::size_t i) { return L.basis[i].degree % 2 != 0; };

    // a central even generator that is the value of a diagonal bracket
    std::size_t elim = m, src = m;
    Rational factor;
    if (eliminate_central) {
        for (std::size_t l = 0; l < m && elim == m; ++l) {
            if (!odd(l))
                continue;
            const auto* val = L.bracket(l, l);
            if (!val || val->size() != 1)
                continue;
            auto [t, c] = (*val)[0];
            if (t == l || odd(t) || c == 0)
                continue;
            bool central = true;
            for (std::size_t i = 0; i < m && central; ++i)
                if (L.bracket(t, i) || L.bracket(i, t))
                    central = false;
            if (!central)
                continue;
            elim = t;
            src = l;
            factor = Rational(2) / c;
        }
    }

    std::vector<std::size_t> to_new(m, m);
    std::vector<GradedGenerator> kept;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == elim)
            continue;
        to_new[i] = kept.size();
        kept.push_back(L.basis[i]);
    }
    NCContextPtr ctx = make_nc_context(kept);

    auto bracket_poly = [&](std::size_t k, std::size_t l) {
        NCPoly r(ctx);
        if (const auto* val = L.bracket(k, l))
            for (const auto& [t, c] : *val) {
                if (t == elim)
                    r.add_term(w2(to_new[src], to_new[src]), c * factor);
                else
                    r.add_term(w1(to_new[t]), c);
            }
        return r;
    };

    std::vector<NCPoly> squares, anti, comm;
    for (std::size_t l = 0; l < m; ++l) {
        if (l == elim)
            continue;
        if (odd(l)) {
            NCPoly rel = NCPoly::term(ctx, w2(to_new[l], to_new[l])) -
                         bracket_poly(l, l) * Rational(1, 2);
            if (!rel.is_zero())
                squares.push_back(std::move(rel));
        }
        for (std::size_t k = 0; k < l; ++k) {
            if (k == elim)
                continue;
            int sign = odd(k) && odd(l) ? -1 : 1;
            NCPoly rel = NCPoly::term(ctx, w2(to_new[l], to_new[k])) -
                         NCPoly::term(ctx, w2(to_new[k], to_new[l])) * Rational(sign) -
                         bracket_poly(l, k);
            if (rel.is_zero())
                continue;
            (odd(k) && odd(l) ? anti : comm).push_back(std::move(rel));
        }
    }

    std::vector<NCPoly> relations;
    relations.insert(relations.end(), squares.begin(), squares.end());
    relations.insert(relations.end(), anti.begin(), anti.end());
    relations.insert(relations.end(), comm.begin(), comm.end());

    NCPresentation core = make_presentation(ctx, relations);
    if (elim != m) {
        const std::string& en = L.basis[elim].name;
        const std::string& sn = L.basis[src].name;
        core.eliminations.push_back(
            en + " = " + (factor == 1 ? "" : loophom::to_string(factor) + "*") + sn + "^2");
        // relations from pairs with the eliminated generator, substituted;
        // kept only when they fail to reduce to zero against the rest
        complete(core, prune_bound);
        std::vector<NCPoly> extra;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == elim)
                continue;
            NCPoly sq = NCPoly::term(ctx, w2(to_new[src], to_new[src]));
            NCPoly gk = NCPoly::generator(ctx, to_new[k]);
            NCPoly rel = sq * gk - gk * sq;  // the eliminated generator was central
            if (!nc_normal_form(core, rel).is_zero())
                extra.push_back(rel);
        }
        if (!extra.empty()) {
            core.relations.insert(core.relations.end(), extra.begin(), extra.end());
            core.rules.clear();
            core.completed_to = -1;
        }
    }
    return core;
}

namespace {

// commutation relations for every pair that is not (odd, odd) among the
// first `n_anti` generators; those pairs anticommute instead
void tensor_relations(const NCContextPtr& ctx, std::size_t n_anti, std::vector<NCPoly>& rels) {
    const std::size_t m = ctx->size();
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            int sign = (i < n_anti && j < n_anti) ? -1 : 1;
            rels.push_back(NCPoly::term(ctx, w2(j, i)) -
                           NCPoly::term(ctx, w2(i, j)) * Rational(sign));
        }
}

NCPresentation su_integral(int n, int z_count) {
    std::vector<GradedGenerator> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back({"x" + std::to_string(i), 1});
    for (int i = 2; i <= n; ++i)
        gens.push_back({"y" + std::to_string(i), 4 * i - 2});
    for (int i = 1; i <= z_count; ++i)
        gens.push_back({"z" + std::to_string(i), 4 * i});
    NCContextPtr ctx = make_nc_context(gens);
    std::vector<NCPoly> rels;
    for (int i = 2; i <= n; ++i)
        rels.push_back(NCPoly::term(ctx, w2(i - 1, i - 1)) - NCPoly::term(ctx, w2(0, 0)));
    tensor_relations(ctx, static_cast<std::size_t>(n), rels);
    return make_presentation(ctx, std::move(rels), CoefficientRing::Integer);
}

// Composite generators for the orthogonal family: y_1..y_{n-1}, then
// s = y_n + z and d = y_n - z in degree 2n, then w_i = 2 y_i above.
struct SoLayout {
    NCContextPtr ctx;
    int n;
    std::size_t nx;

    std::size_t y(int i) const { return nx + static_cast<std::size_t>(i) - 1; }  // 1..n-1
    std::size_t s() const { return nx + static_cast<std::size_t>(n) - 1; }
    std::size_t d() const { return nx + static_cast<std::size_t>(n); }
    std::size_t w(int i) const { return nx + static_cast<std::size_t>(i) + 1; }  // n+1..2n

    // 2*y_b as a polynomial in the stated generators
    NCPoly twice(int b) const {
        if (b <= n - 1)
            return NCPoly::term(ctx, w1(y(b)), 2);
        if (b == n)
            return NCPoly::term(ctx, w1(s())) + NCPoly::term(ctx, w1(d()));
        return NCPoly::term(ctx, w1(w(b)));
    }

    // 2*y_a*y_b with y_0 = 1; a <= n-1 throughout the quadratic relations
    NCPoly pair(int a, int b) const {
        if (a == 0)
            return twice(b);
        return NCPoly::term(ctx, w1(y(a))) * twice(b);
    }

    // y_i^2 - 2 y_{i-1} y_{i+1} + ... +- 2 y_{2i}, with s*d in place of
    // y_n^2 for the top relation
    NCPoly quadratic(int i) const {
        NCPoly rel = i == n ? NCPoly::term(ctx, w2(s(), d()))
                            : NCPoly::term(ctx, w2(y(i), y(i)));
        int sign = -1;
        for (int j = 1; j <= i; ++j, sign = -sign)
            rel += pair(i - j, i + j) * Rational(sign);
        return rel;
    }
};

SoLayout so_layout(int n, int nx) {
    std::vector<GradedGenerator> gens;
    for (int i = 1; i <= nx; ++i)
        gens.push_back({"x" + std::to_string(i), 1});
    for (int i = 1; i <= n - 1; ++i)
        gens.push_back({"y" + std::to_string(i), 2 * i});
    gens.push_back({"s", 2 * n});
    gens.push_back({"d", 2 * n});
    for (int i = n + 1; i <= 2 * n; ++i)
        gens.push_back({"w" + std::to_string(i), 2 * i});
    return {make_nc_context(gens), n, static_cast<std::size_t>(nx)};
}

NCPresentation so_integral(int n, int nx) {
    SoLayout lay = so_layout(n, nx);
    const auto& ctx = lay.ctx;
    std::vector<NCPoly> rels;
    if (n == 1) {
        // x_1^2 = y_1 has no integral witness here; 2 x_1^2 = s + d does
        rels.push_back(NCPoly::term(ctx, w2(0, 0), 2) - NCPoly::term(ctx, w1(lay.s())) -
                       NCPoly::term(ctx, w1(lay.d())));
    } else {
        rels.push_back(NCPoly::term(ctx, w2(0, 0)) - NCPoly::term(ctx, w1(lay.y(1))));
    }
    for (std::size_t i = 1; i < lay.nx; ++i)
        rels.push_back(NCPoly::term(ctx, w2(i - 1, i - 1)) - NCPoly::term(ctx, w2(i, i)));
    for (int i = 1; i <= n - 1; ++i)
        rels.push_back(lay.quadratic(i));
    rels.push_back(lay.quadratic(n));
    tensor_relations(ctx, lay.nx, rels);
    return make_presentation(ctx, std::move(rels), CoefficientRing::Integer);
}

NCPresentation so8_integral() {
    SoLayout lay = so_layout(3, 2);
    const auto& ctx = lay.ctx;
    std::vector<NCPoly> rels;
    rels.push_back(NCPoly::term(ctx, w2(0, 0)) - NCPoly::term(ctx, w1(lay.y(1))));
    rels.push_back(NCPoly::term(ctx, w2(0, 0)) - NCPoly::term(ctx, w2(1, 1)));
    // x_1^2 equals the anticommutator of x_1 and x_2
    rels.push_back(NCPoly::term(ctx, w2(0, 0)) - NCPoly::term(ctx, w2(0, 1)) -
                   NCPoly::term(ctx, w2(1, 0)));
    for (int i = 1; i <= 3; ++i)
        rels.push_back(lay.quadratic(i));
    tensor_relations(ctx, 2, rels);
    // the explicit anticommutator relation above replaces the generic one
    std::vector<NCPoly> filtered;
    NCPoly generic = NCPoly::term(ctx, w2(1, 0)) + NCPoly::term(ctx, w2(0, 1));
    for (auto& r : rels)
        if (r != generic)
            filtered.push_back(std::move(r));
    return make_presentation(ctx, std::move(filtered), CoefficientRing::Integer);
}

NCPresentation e6_integral() {
    std::vector<GradedGenerator> gens;
    for (int i = 1; i <= 4; ++i)
        gens.push_back({"x" + std::to_string(i), 1});
    for (int i : {1, 2, 3, 4, 5, 7, 8, 11})
        gens.push_back({"y" + std::to_string(i), 2 * i});
    NCContextPtr ctx = make_nc_context(gens);
    auto y = [&](int i) -> std::size_t {
        switch (i) {
        case 1: case 2: case 3: case 4: case 5: return static_cast<std::size_t>(3 + i);
        case 7: return 9;
        case 8: return 10;
        default: return 11;  // y11
        }
    };
    std::vector<NCPoly> rels;
    for (std::size_t k = 0; k < 4; ++k)
        rels.push_back(NCPoly::term(ctx, w2(k, k)) - NCPoly::term(ctx, w1(y(1)), 12));
    // 2 y_2 = x_1^4 and 3 y_3 = x_1^2 y_2
    rels.push_back(NCPoly::term(ctx, {0, 0, 0, 0}) - NCPoly::term(ctx, w1(y(2)), 2));
    rels.push_back(NCPoly::term(ctx, {0, 0, static_cast<std::uint32_t>(y(2))}) -
                   NCPoly::term(ctx, w1(y(3)), 3));
    tensor_relations(ctx, 4, rels);
    return make_presentation(ctx, std::move(rels), CoefficientRing::Integer);
}

NCPresentation a_partial_integral(int n, int k) {
    std::vector<GradedGenerator> gens;
    for (int i = 1; i <= k; ++i)
        gens.push_back({"x" + std::to_string(i), 1});
    for (int j = n - k + 1; j <= n; ++j)
        gens.push_back({"y" + std::to_string(j), 2 * j - 2});
    NCContextPtr ctx = make_nc_context(gens);
    std::vector<NCPoly> rels;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
        rels.push_back(NCPoly::term(ctx, w2(i, i)));
    tensor_relations(ctx, static_cast<std::size_t>(k), rels);
    return make_presentation(ctx, std::move(rels), CoefficientRing::Integer);
}

} // namespace

NCPresentation integral_presentation(CatalogCase c, const CatalogParams& params) {
    validate_params(c, params);
    switch (c) {
    case CatalogCase::SuOdd: return su_integral(params.n, params.n);
    case CatalogCase::SuEven: return su_integral(params.n, params.n - 1);
    case CatalogCase::SoEven: return so_integral(params.n, params.n);
    case CatalogCase::So8: return so8_integral();
    case CatalogCase::E6T4: return e6_integral();
    case CatalogCase::APartial: return a_partial_integral(params.n, params.k);
    }
    throw ParameterError("unknown catalog case");
}

} // namespace loophom
