#pragma once

#include <Eigen/Core>

#include <map>
#include <string>
#include <vector>

#include "bethesym/laurent.hpp"

namespace bethesym {

/// Quotient of Laurent polynomials; the universal scalar of the library.
/// Equality is decided by cross-multiplication, never by representation.
/// Cheap reductions after every operation keep monomial denominators out;
/// full polynomial gcds are deliberately not attempted.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT: scalar literals
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(const LaurentPolynomial& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

    static RationalFunction variable(const std::string& name, int exponent = 1) {
        return RationalFunction(LaurentPolynomial::variable(name, exponent));
    }

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction reciprocal() const;
    RationalFunction pow(long e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    Rational evaluate(const std::map<int32_t, Rational>& assignment) const;

    std::vector<int32_t> vars() const;

    /// Scales so the denominator has unit leading coefficient and the shared
    /// rational content of numerator and denominator is removed.
    void normalize();

    /// Canonical text form; normalizes first.
    std::string str() const;

  private:
    void reduce();
    LaurentPolynomial num_, den_;
};

inline RationalFunction operator+(long a, const RationalFunction& b) { return RationalFunction(a) + b; }
inline RationalFunction operator-(long a, const RationalFunction& b) { return RationalFunction(a) - b; }
inline RationalFunction operator*(long a, const RationalFunction& b) { return RationalFunction(a) * b; }
inline RationalFunction operator/(long a, const RationalFunction& b) { return RationalFunction(a) / b; }

using Rf = RationalFunction;

}  // namespace bethesym

namespace Eigen {

template <>
struct NumTraits<bethesym::RationalFunction> {
    using Real = bethesym::RationalFunction;
    using NonInteger = bethesym::RationalFunction;
    using Nested = bethesym::RationalFunction;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = HugeCost,
        AddCost = HugeCost,
        MulCost = HugeCost,
    };
    static int digits10() { return 0; }
};

}  // namespace Eigen
