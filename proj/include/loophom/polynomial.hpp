#pragma once

#include "loophom/generators.hpp"
#include "loophom/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace loophom {

// Exponent vector over a fixed context; always sized to the context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1) {
        Monomial m(nvars);
        m.exps_[i] = e;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    unsigned exp(std::size_t i) const { return exps_[i]; }
    bool is_one() const;

    // Topological degree: exponents weighted by generator degrees.
    int degree(const PolyContext& ctx) const;
    // Number of letters when written out as a word.
    unsigned word_length() const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    // other / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    const std::vector<unsigned>& exps() const { return exps_; }
    std::vector<unsigned>& exps() { return exps_; }

private:
    std::vector<unsigned> exps_;
};

enum class MonomialOrder { GradedLex, GradedRevLex };

// Returns <0, 0, >0 like a three-way compare.
int compare(const Monomial& a, const Monomial& b, const PolyContext& ctx, MonomialOrder order);

struct MonomialLess {
    const PolyContext* ctx = nullptr;
    MonomialOrder order = MonomialOrder::GradedLex;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, *ctx, order) < 0;
    }
};

using TermMap = std::map<Monomial, Rational, MonomialLess>;

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept canonically sorted (graded-lex by declaration order)
// with no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(PolyContextPtr ctx);

    static Polynomial zero(PolyContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(PolyContextPtr ctx, Rational c);
    static Polynomial variable(PolyContextPtr ctx, std::size_t i);
    static Polynomial variable(PolyContextPtr ctx, std::string_view name);
    static Polynomial term(PolyContextPtr ctx, Monomial m, Rational c);

    const PolyContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Topological degree of the highest term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Polynomial homogeneous_component(int topdegree) const;
    // Terms whose exponents sum to `len` (the word-length filtration).
    Polynomial word_length_component(unsigned len) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial pow(unsigned e) const;

    void add_term(const Monomial& m, const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Divide by the gcd of the numerators times the lcm of the denominators,
    // keeping the sign of the canonical leading term positive.
    Polynomial primitive_part() const;
    std::string to_string() const;

private:
    PolyContextPtr ctx_;
    TermMap terms_;
};

// Image of p under a generator assignment into `target`.  Generators absent
// from `images` map to the same-named generator of the target context.
// In graded mode every image must be homogeneous of the generator's degree
// (the zero polynomial is allowed).
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images,
                      const PolyContextPtr& target,
                      bool graded = true);

} // namespace loophom
