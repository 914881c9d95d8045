#include "loophom/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace loophom {

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

int Monomial::degree(const PolyContext& ctx) const {
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += static_cast<int>(exps_[i]) * ctx.gen(i).degree;
    return d;
}

unsigned Monomial::word_length() const {
    unsigned n = 0;
    for (unsigned e : exps_)
        n += e;
    return n;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = exps_[i] + other.exps_[i];
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = other.exps_[i] - exps_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

int compare(const Monomial& a, const Monomial& b, const PolyContext& ctx, MonomialOrder order) {
    int da = a.degree(ctx), db = b.degree(ctx);
    if (da != db)
        return da < db ? -1 : 1;
    switch (order) {
    case MonomialOrder::GradedLex:
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exp(i) != b.exp(i))
                return a.exp(i) < b.exp(i) ? -1 : 1;
        return 0;
    case MonomialOrder::GradedRevLex:
        for (std::size_t i = a.nvars(); i-- > 0;)
            if (a.exp(i) != b.exp(i))
                return a.exp(i) > b.exp(i) ? -1 : 1;
        return 0;
    }
    return 0;
}

Polynomial::Polynomial(PolyContextPtr ctx)
    : ctx_(std::move(ctx)), terms_(MonomialLess{ctx_.get(), MonomialOrder::GradedLex}) {}

Polynomial Polynomial::constant(PolyContextPtr ctx, Rational c) {
    Polynomial p(std::move(ctx));
    if (c != 0)
        p.terms_.emplace(Monomial::one(p.ctx_->size()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(PolyContextPtr ctx, std::size_t i) {
    Polynomial p(std::move(ctx));
    p.terms_.emplace(Monomial::variable(p.ctx_->size(), i), Rational(1));
    return p;
}

Polynomial Polynomial::variable(PolyContextPtr ctx, std::string_view name) {
    auto idx = ctx->index_of(name);
    if (!idx)
        throw SubstitutionError("unknown generator '" + std::string(name) + "'");
    return variable(std::move(ctx), *idx);
}

Polynomial Polynomial::term(PolyContextPtr ctx, Monomial m, Rational c) {
    Polynomial p(std::move(ctx));
    if (c != 0)
        p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree(*ctx_));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.degree(*ctx_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*ctx_) != d)
            return false;
    return true;
}

Polynomial Polynomial::homogeneous_component(int topdegree) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*ctx_) == topdegree)
            r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::word_length_component(unsigned len) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.word_length() == len)
            r.terms_.emplace(m, c);
    return r;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (!same_context(ctx_, other.ctx_))
        throw ContextError("polynomial addition across different contexts");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (!same_context(ctx_, other.ctx_))
        throw ContextError("polynomial subtraction across different contexts");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.ctx_, b.ctx_))
        throw ContextError("polynomial multiplication across different contexts");
    Polynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = Polynomial::constant(ctx_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.ctx_, b.ctx_))
        return false;
    if (a.terms_.size() != b.terms_.size())
        return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || ia->second != ib->second)
            return false;
    return true;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty())
        return *this;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational scale(den_lcm, num_gcd);
    if (terms_.rbegin()->second < 0)
        scale = -scale;
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, c * scale);
    return r;
}

namespace {

void append_monomial(std::ostream& os, const Monomial& m, const PolyContext& ctx) {
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0)
            continue;
        if (!first)
            os << "*";
        os << ctx.gen(i).name;
        if (m.exp(i) > 1)
            os << "^" << m.exp(i);
        first = false;
    }
}

} // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (m.is_one())
            os << loophom::to_string(abs_c);
        else {
            if (abs_c != 1)
                os << loophom::to_string(abs_c) << "*";
            append_monomial(os, m, *ctx_);
        }
        first = false;
    }
    return os.str();
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images,
                      const PolyContextPtr& target,
                      bool graded) {
    const PolyContext& src = *p.context();
    std::vector<Polynomial> image_of;
    image_of.reserve(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto& g = src.gen(i);
        auto it = images.find(g.name);
        Polynomial img = Polynomial::zero(target);
        if (it != images.end()) {
            img = it->second;
            if (!same_context(img.context(), target))
                throw ContextError("substitution image for '" + g.name + "' lives in a different context");
        } else {
            auto idx = target->index_of(g.name);
            if (!idx)
                throw SubstitutionError("no image for generator '" + g.name + "'");
            img = Polynomial::variable(target, *idx);
        }
        if (graded && !img.is_zero()) {
            if (!img.is_homogeneous() || img.degree() != g.degree)
                throw GradingError("image of '" + g.name + "' is not homogeneous of degree " +
                                   std::to_string(g.degree));
        }
        image_of.push_back(std::move(img));
    }

    Polynomial result = Polynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < src.size() && !term.is_zero(); ++i)
            if (m.exp(i) > 0)
                term = term * image_of[i].pow(m.exp(i));
        result += term;
    }
    return result;
}

} // namespace loophom
