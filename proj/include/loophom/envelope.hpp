#pragma once

#include "loophom/cases.hpp"
#include "loophom/hilbert.hpp"
#include "loophom/rational.hpp"
#include "loophom/sullivan.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace loophom {

// Generators of a noncommutative graded algebra, in homological degrees.
class NCContext {
public:
    explicit NCContext(std::vector<GradedGenerator> gens) : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].degree < 1)
                throw GradingError("generator '" + gens_[i].name + "' must have degree >= 1");
            for (std::size_t j = 0; j < i; ++j)
                if (gens_[j].name == gens_[i].name)
                    throw SemanticError("duplicate generator name '" + gens_[i].name + "'");
        }
    }
    std::size_t size() const { return gens_.size(); }
    const GradedGenerator& gen(std::size_t i) const { return gens_[i]; }
    const std::vector<GradedGenerator>& gens() const { return gens_; }
    friend bool operator==(const NCContext& a, const NCContext& b) { return a.gens_ == b.gens_; }

private:
    std::vector<GradedGenerator> gens_;
};

using NCContextPtr = std::shared_ptr<const NCContext>;

inline NCContextPtr make_nc_context(std::vector<GradedGenerator> gens) {
    return std::make_shared<const NCContext>(std::move(gens));
}

// A word is a product of generators, left to right, by index.
using Word = std::vector<std::uint32_t>;

int word_degree(const NCContext& ctx, const Word& w);
std::string word_to_string(const NCContext& ctx, const Word& w);

// Degree first, then length, then left-to-right comparison of letter indices.
int compare_words(const NCContext& ctx, const Word& a, const Word& b);

struct WordLess {
    const NCContext* ctx = nullptr;
    bool operator()(const Word& a, const Word& b) const { return compare_words(*ctx, a, b) < 0; }
};

class NCPoly {
public:
    explicit NCPoly(NCContextPtr ctx);
    static NCPoly zero(NCContextPtr ctx) { return NCPoly(std::move(ctx)); }
    static NCPoly term(NCContextPtr ctx, Word w, Rational c = 1);
    static NCPoly generator(NCContextPtr ctx, std::size_t i);

    const NCContextPtr& context() const { return ctx_; }
    const std::map<Word, Rational, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // highest word degree; -1 if zero
    bool is_homogeneous() const;

    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Rational& leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(const Word& w, const Rational& c);
    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& other);
    NCPoly& operator-=(const NCPoly& other);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly& operator*=(const Rational& c);
    friend NCPoly operator*(NCPoly p, const Rational& c) { return p *= c; }
    friend NCPoly operator*(const Rational& c, NCPoly p) { return p *= c; }
    friend bool operator==(const NCPoly& a, const NCPoly& b);
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    NCContextPtr ctx_;
    std::map<Word, Rational, WordLess> terms_;
};

struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

enum class CoefficientRing { Rational, Integer };

// Homogeneous relations plus the oriented rewrite system derived from them.
// Completion and counting always run over the rationals; the Integer tag
// records that the relations themselves have integer coefficients.
struct NCPresentation {
    NCContextPtr ctx;
    CoefficientRing ring = CoefficientRing::Rational;
    std::vector<NCPoly> relations;
    std::vector<std::string> eliminations;

    std::vector<RewriteRule> rules;
    int completed_to = -1;
};

NCPresentation make_presentation(NCContextPtr ctx, std::vector<NCPoly> relations,
                                 CoefficientRing ring = CoefficientRing::Rational);

// Knuth-Bendix overlap resolution for all overlap words of degree <= bound.
void complete(NCPresentation& p, int bound);

// Every overlap of degree <= bound resolves to a common normal form.
bool check_confluence(const NCPresentation& p, int bound);

NCPoly nc_normal_form(const NCPresentation& p, NCPoly q);

// Irreducible words per degree 0..bound; completes the system first.
std::vector<std::vector<Word>> normal_basis(NCPresentation& p, int bound);
std::vector<long long> normal_basis_counts(NCPresentation& p, int bound);
HilbertSeries nc_series(NCPresentation& p, int bound);

// Graded dimension of the enveloping algebra from the basis degrees alone.
HilbertSeries pbw_series(const LieAlgebraData& L, int bound);

struct ComparisonReport {
    bool match = false;
    int mismatch_degree = -1;
    std::vector<long long> lhs, rhs;
};

ComparisonReport verify_presentation(NCPresentation& p, const HilbertSeries& expected, int bound);

// Degreewise rank comparison of an integer presentation against a rational
// one; ranks of the integer side are those of its rationalization.
ComparisonReport rank_compare(NCPresentation& integral, NCPresentation& rational, int bound);

// T(L) modulo x y - (-1)^{deg x deg y} y x - [x, y].  When a central even
// basis element is the value of a diagonal bracket [x, x] it is eliminated
// by substitution (recorded in `eliminations`); relations that become
// redundant after the substitution are pruned when they provably reduce
// to zero.
NCPresentation enveloping(const LieAlgebraData& L, bool eliminate_central = true,
                          int prune_bound = 20);

// The stated integer presentations, case by case.
NCPresentation integral_presentation(CatalogCase c, const CatalogParams& params);

} // namespace loophom
