#include "bethesym/rational_function.hpp"

#include <algorithm>

namespace bethesym {

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPolynomial(1);
        return;
    }
    if (den_.is_monomial()) {
        if (!den_.is_one())
            num_ = num_.times_monomial(den_.terms()[0].mono.inverse(),
                                       den_.terms()[0].coeff.reciprocal());
        den_ = LaurentPolynomial(1);
        return;
    }
    // strip the shared monomial factor; keeps intermediate exponents small
    // (monomial_content().exponent_of(v) is the min exponent of v, 0 if absent)
    Monomial gn = num_.monomial_content();
    Monomial gd = den_.monomial_content();
    std::map<int32_t, int32_t> mins;
    for (auto& [v, e] : gn.factors) mins[v] = std::min(e, gd.exponent_of(v));
    for (auto& [v, e] : gd.factors)
        if (!mins.count(v)) mins[v] = std::min(e, gn.exponent_of(v));
    Monomial g;
    for (auto& [v, e] : mins)
        if (e != 0) g.factors.push_back({v, e});
    if (!g.is_unit()) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPolynomial(1);
        return;
    }
    // Unit leading coefficient on the denominator fixes the representative
    // completely (any shared rational content is absorbed by the same scaling).
    Rational scale = den_.leading_term().coeff.reciprocal();
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    RationalFunction r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.reduce();
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
    RationalFunction r;
    r.num_ = num_ * o.den_;
    r.den_ = den_ * o.num_;
    r.reduce();
    return r;
}

RationalFunction RationalFunction::reciprocal() const {
    if (num_.is_zero()) throw DivisionByZero("reciprocal of the zero rational function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(1);
    RationalFunction base = *this;
    if (e < 0) {
        base = reciprocal();
        e = -e;
    }
    RationalFunction acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

Rational RationalFunction::evaluate(const std::map<int32_t, Rational>& assignment) const {
    Rational d = den_.evaluate(assignment);
    if (d.is_zero()) throw SingularPoint();
    return num_.evaluate(assignment) / d;
}

std::vector<int32_t> RationalFunction::vars() const {
    std::vector<int32_t> v;
    num_.collect_vars(v);
    den_.collect_vars(v);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string RationalFunction::str() const {
    RationalFunction c = *this;
    c.normalize();
    if (c.den_.is_one()) return c.num_.str();
    return "(" + c.num_.str() + ") / (" + c.den_.str() + ")";
}

}  // namespace bethesym
