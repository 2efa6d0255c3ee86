#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bethesym/errors.hpp"

namespace bethesym {

/// Arbitrary-precision rational with GMP storage. Always canonical:
/// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q". Throws Error on malformed input.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational reciprocal() const {
        if (is_zero()) throw DivisionByZero("reciprocal of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(long e) const;

    /// Canonical text: "p" when integral, else "p/q".
    std::string str() const;

    /// gcd(a, b) = gcd of numerators / lcm of denominators, nonnegative; gcd(0,0) = 0.
    static Rational gcd(const Rational& a, const Rational& b);

  private:
    mpq_class v_;
};

inline Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    mpq_class base = v_;
    if (e < 0) {
        if (is_zero()) throw DivisionByZero("0 raised to a negative power");
        base = mpq_class(1) / base;
        e = -e;
    }
    mpq_class acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(acc);
}

inline std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw Error("malformed rational literal: " + text);
    try {
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + text);
    }
}

inline Rational Rational::gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.sign() < 0 ? -b : b;
    if (b.is_zero()) return a.sign() < 0 ? -a : a;
    mpz_class gn, dl;
    mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(dl.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(gn, dl));
}

}  // namespace bethesym
