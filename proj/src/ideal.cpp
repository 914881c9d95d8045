#include "loophom/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace loophom {

namespace {

struct LeadTerm {
    Monomial mono;
    Rational coeff;
};

LeadTerm lead(const TermMap& p) {
    auto it = p.rbegin();
    return {it->first, it->second};
}

TermMap to_ordered(const Polynomial& p, MonomialOrder order) {
    TermMap t(MonomialLess{p.context().get(), order});
    for (const auto& [m, c] : p.terms())
        t.emplace(m, c);
    return t;
}

Polynomial from_ordered(const PolyContextPtr& ctx, const TermMap& t) {
    Polynomial p = Polynomial::zero(ctx);
    for (const auto& [m, c] : t)
        p.add_term(m, c);
    return p;
}

void add_into(TermMap& dst, const Monomial& m, const Rational& c) {
    auto [it, inserted] = dst.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            dst.erase(it);
    }
}

// dst -= c * m * src
void submul(TermMap& dst, const Rational& c, const Monomial& m, const TermMap& src) {
    for (const auto& [ms, cs] : src)
        add_into(dst, m * ms, -c * cs);
}

// Full reduction by a monic basis; returns the remainder.
TermMap reduce_full(TermMap h, const std::vector<TermMap>& basis, const std::vector<Monomial>& leads) {
    TermMap rem(h.key_comp());
    while (!h.empty()) {
        auto lt = lead(h);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (leads[i].divides(lt.mono)) {
                submul(h, lt.coeff, leads[i].quotient_of(lt.mono), basis[i]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.emplace(lt.mono, lt.coeff);
            h.erase(std::prev(h.end()));
        }
    }
    return rem;
}

void make_monic(TermMap& p) {
    if (p.empty())
        return;
    Rational c = p.rbegin()->second;
    if (c == 1)
        return;
    for (auto& [m, coeff] : p)
        coeff /= c;
}

} // namespace

IdealBasis groebner_basis(std::vector<Polynomial> gens, MonomialOrder order,
                          std::optional<int> degree_bound) {
    IdealBasis result;
    result.order = order;
    result.degree_bound = degree_bound;

    PolyContextPtr ctx;
    for (const auto& g : gens) {
        if (!ctx)
            ctx = g.context();
        else if (!same_context(ctx, g.context()))
            throw ContextError("ideal generators live in different contexts");
    }
    result.ctx = ctx;
    result.generators = gens;
    if (!ctx)
        return result;  // zero ideal: valid, empty basis

    const PolyContext& c = *ctx;
    std::vector<TermMap> basis;
    std::vector<Monomial> leads;

    auto append = [&](TermMap p) {
        make_monic(p);
        leads.push_back(p.rbegin()->first);
        basis.push_back(std::move(p));
    };

    // pending S-pairs keyed by lcm degree for a degree-by-degree sweep
    std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> pending;
    std::set<std::pair<std::size_t, std::size_t>> open_pairs;

    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(leads[i], leads[j]);
            int d = l.degree(c);
            if (degree_bound && d > *degree_bound)
                continue;
            pending[d].push_back({i, j});
            open_pairs.insert({i, j});
        }
    };

    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        TermMap t = to_ordered(g, order);
        t = reduce_full(std::move(t), basis, leads);
        if (t.empty())
            continue;
        append(std::move(t));
        queue_pairs_with(basis.size() - 1);
    }

    while (!pending.empty()) {
        auto bucket = pending.begin();
        auto pairs = std::move(bucket->second);
        pending.erase(bucket);
        for (auto [i, j] : pairs) {
            open_pairs.erase({i, j});
            Monomial l = Monomial::lcm(leads[i], leads[j]);
            // product criterion: coprime leading monomials reduce to zero
            if (l == leads[i] * leads[j])
                continue;
            // chain criterion: a third lead dividing the lcm whose pairs with
            // both i and j are already settled
            bool skip = false;
            for (std::size_t k = 0; k < leads.size() && !skip; ++k) {
                if (k == i || k == j || !leads[k].divides(l))
                    continue;
                auto pik = std::minmax(i, k);
                auto pjk = std::minmax(j, k);
                if (!open_pairs.count({pik.first, pik.second}) &&
                    !open_pairs.count({pjk.first, pjk.second}))
                    skip = true;
            }
            if (skip)
                continue;

            TermMap s(MonomialLess{ctx.get(), order});
            submul(s, Rational(-1), leads[i].quotient_of(l), basis[i]);
            submul(s, Rational(1), leads[j].quotient_of(l), basis[j]);
            s = reduce_full(std::move(s), basis, leads);
            if (s.empty())
                continue;
            append(std::move(s));
            queue_pairs_with(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
            if (i != j && leads[j].divides(leads[i]) &&
                (!(leads[i] == leads[j]) || j < i))
                redundant = true;
        if (!redundant)
            keep.push_back(i);
    }

    // inter-reduce the survivors
    std::vector<TermMap> minimal;
    std::vector<Monomial> min_leads;
    for (std::size_t i : keep) {
        minimal.push_back(basis[i]);
        min_leads.push_back(leads[i]);
    }
    std::vector<TermMap> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<TermMap> others;
        std::vector<Monomial> other_leads;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                other_leads.push_back(min_leads[j]);
            }
        TermMap r = reduce_full(minimal[i], others, other_leads);
        make_monic(r);
        reduced.push_back(std::move(r));
    }

    // deterministic order: ascending leading monomial
    std::sort(reduced.begin(), reduced.end(), [&](const TermMap& a, const TermMap& b) {
        return compare(a.rbegin()->first, b.rbegin()->first, c, order) < 0;
    });
    for (const auto& t : reduced)
        result.groebner.push_back(from_ordered(ctx, t));
    return result;
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal) {
    if (ideal.groebner.empty())
        return p;
    if (!same_context(p.context(), ideal.ctx))
        throw ContextError("normal form against an ideal from a different context");
    std::vector<TermMap> basis;
    std::vector<Monomial> leads;
    for (const auto& g : ideal.groebner) {
        basis.push_back(to_ordered(g, ideal.order));
        leads.push_back(basis.back().rbegin()->first);
    }
    TermMap r = reduce_full(to_ordered(p, ideal.order), basis, leads);
    return from_ordered(p.context(), r);
}

bool is_member(const Polynomial& p, const IdealBasis& ideal) {
    if (p.is_zero())
        return true;
    if (ideal.degree_bound && p.degree() > *ideal.degree_bound)
        throw BoundError("membership query above the ideal's truncation degree");
    return normal_form(p, ideal).is_zero();
}

namespace {

void count_standard(const PolyContext& ctx, const std::vector<Monomial>& leads,
                    Monomial& current, std::size_t var, int degree, int bound,
                    std::vector<long long>& out) {
    if (var == ctx.size()) {
        for (const auto& l : leads)
            if (l.divides(current))
                return;
        ++out[static_cast<std::size_t>(degree)];
        return;
    }
    int gen_degree = ctx.gen(var).degree;
    for (unsigned e = 0;; ++e) {
        int d = degree + static_cast<int>(e) * gen_degree;
        if (d > bound)
            break;
        current.exps()[var] = e;
        count_standard(ctx, leads, current, var + 1, d, bound, out);
    }
    current.exps()[var] = 0;
}

} // namespace

std::vector<long long> quotient_dimensions(const IdealBasis& ideal, int bound) {
    std::vector<long long> out(static_cast<std::size_t>(bound) + 1, 0);
    if (!ideal.ctx) {
        out[0] = 1;  // zero ideal over the empty context
        return out;
    }
    if (ideal.degree_bound && *ideal.degree_bound < bound)
        throw BoundError("counting beyond the ideal's truncation degree");
    std::vector<Monomial> leads;
    for (const auto& g : ideal.groebner)
        leads.push_back(to_ordered(g, ideal.order).rbegin()->first);
    Monomial current(ideal.ctx->size());
    count_standard(*ideal.ctx, leads, current, 0, 0, bound, out);
    return out;
}

int regular_sequence_bound(const PolyContext& ctx, const std::vector<Polynomial>& seq) {
    int bound = 0;
    for (const auto& p : seq)
        bound += p.degree();
    int max_var = 0;
    for (const auto& g : ctx.gens())
        max_var = std::max(max_var, g.degree);
    return bound + max_var;
}

bool is_regular_sequence(const PolyContextPtr& ambient, const std::vector<Polynomial>& seq,
                         std::optional<int> bound) {
    std::vector<int> rel_degrees;
    for (const auto& p : seq) {
        if (!p.is_homogeneous())
            throw GradingError("regular-sequence test on an inhomogeneous element");
        if (p.is_zero())
            return false;
        if (!same_context(p.context(), ambient))
            throw ContextError("sequence element outside the ambient context");
        rel_degrees.push_back(p.degree());
    }
    int n = bound ? *bound : regular_sequence_bound(*ambient, seq);

    std::vector<int> var_degrees;
    for (const auto& g : ambient->gens())
        var_degrees.push_back(g.degree);
    HilbertSeries expected = complete_intersection_series(var_degrees, rel_degrees, {}, n);

    IdealBasis ideal = groebner_basis(seq, MonomialOrder::GradedRevLex, n);
    ideal.ctx = ambient;
    std::vector<long long> counts = quotient_dimensions(ideal, n);
    for (int d = 0; d <= n; ++d)
        if (counts[static_cast<std::size_t>(d)] != expected[d])
            return false;
    return true;
}

CartanReduction cartan_reduce(const std::vector<std::pair<Polynomial, int>>& restricted,
                              const PolyContextPtr& ambient) {
    std::vector<std::size_t> order(restricted.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return restricted[a].second < restricted[b].second;
    });

    CartanReduction out;
    PolyContextPtr ctx = ambient;
    // composite substitution from the original ambient into the current one
    std::map<std::string, Polynomial> elim_images;

    auto transport = [&](const Polynomial& p) {
        return substitute(p, elim_images, ctx, true);
    };

    std::vector<Polynomial> accepted;
    for (std::size_t idx : order) {
        const auto& [raw, inv_degree] = restricted[idx];
        if (!raw.is_homogeneous())
            throw GradingError("restricted invariant is inhomogeneous");
        Polynomial p = transport(raw);
        if (p.is_zero()) {
            out.exterior_degrees.push_back(inv_degree - 1);
            continue;
        }
        if (p.degree() != inv_degree)
            throw GradingError("restriction degree " + std::to_string(p.degree()) +
                               " does not match the invariant degree " + std::to_string(inv_degree));
        if (p.degree() == 2) {
            // linear in the degree-2 generators: absorb the earliest declared one
            std::size_t victim = 0;
            Rational coeff;
            {
                const auto& [m, c] = *p.terms().rbegin();  // leading term uses the earliest variable
                for (std::size_t i = 0; i < ctx->size(); ++i)
                    if (m.exp(i) > 0) {
                        victim = i;
                        coeff = c;
                        break;
                    }
            }
            const std::string victim_name = ctx->gen(victim).name;
            std::vector<GradedGenerator> rest;
            for (std::size_t i = 0; i < ctx->size(); ++i)
                if (i != victim)
                    rest.push_back(ctx->gen(i));
            PolyContextPtr next = make_context(rest);
            Polynomial image = Polynomial::zero(next);
            for (const auto& [m, c] : p.terms()) {
                for (std::size_t i = 0; i < ctx->size(); ++i)
                    if (m.exp(i) > 0 && i != victim)
                        image -= Polynomial::variable(next, next->index_of(ctx->gen(i).name).value()) *
                                 (c / coeff);
            }
            // rewrite the accumulated images and the accepted relations
            std::map<std::string, Polynomial> step;
            step.emplace(victim_name, image);
            for (auto& [name, img] : elim_images)
                img = substitute(img, step, next, true);
            elim_images.insert_or_assign(victim_name, image);
            for (auto& a : accepted)
                a = substitute(a, step, next, true);
            ctx = next;
            out.eliminated_linear.push_back(victim_name);
            continue;
        }
        IdealBasis so_far = groebner_basis(accepted, MonomialOrder::GradedRevLex);
        if (!accepted.empty() && is_member(p, so_far)) {
            out.exterior_degrees.push_back(inv_degree - 1);
            continue;
        }
        accepted.push_back(p);
        out.regular.emplace_back(idx, p);
    }

    std::vector<Polynomial> seq;
    for (const auto& [i, p] : out.regular)
        seq.push_back(p);
    if (!is_regular_sequence(ctx, seq))
        throw NotCartanPairError("surviving restrictions do not form a regular sequence");
    out.reduced_ctx = ctx;
    return out;
}

} // namespace loophom
