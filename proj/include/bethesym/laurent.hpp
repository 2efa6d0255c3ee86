#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bethesym/rational.hpp"

namespace bethesym {

/// Process-global variable table. Ids are dense and stable; the canonical
/// monomial order ties to registration order, so a fixed universe of common
/// names is registered up front to keep serialized output identical across
/// runs regardless of which task touched a variable first.
class VarRegistry {
  public:
    static VarRegistry& instance();

    int id(const std::string& name);          // registers on first use
    const std::string& name(int id) const;
    int size() const;

  private:
    VarRegistry();
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

inline int var_id(const std::string& name) { return VarRegistry::instance().id(name); }
inline const std::string& var_name(int id) { return VarRegistry::instance().name(id); }

/// Exponent vector with negative powers allowed; zero exponents are never stored.
struct Monomial {
    // (variable id, exponent), sorted by id, exponent != 0
    std::vector<std::pair<int32_t, int32_t>> factors;

    bool is_unit() const { return factors.empty(); }
    long total_degree() const {
        long d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    int exponent_of(int32_t var) const {
        for (auto& [v, e] : factors)
            if (v == var) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(long e) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
};

/// Strict total order: graded first (total degree), then lexicographic by
/// variable id with missing exponents read as zero. Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b);

/// Sparse multivariate Laurent polynomial over Rational. Terms are kept
/// sorted descending in the monomial order with no zero coefficients, so
/// representational equality is semantic equality.
class LaurentPolynomial {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    LaurentPolynomial() = default;
    LaurentPolynomial(long c) { if (c != 0) terms_.push_back({Monomial{}, Rational(c)}); }  // NOLINT
    LaurentPolynomial(const Rational& c) { if (!c.is_zero()) terms_.push_back({Monomial{}, c}); }  // NOLINT

    static LaurentPolynomial variable(int var, int exponent = 1);
    static LaurentPolynomial variable(const std::string& name, int exponent = 1) {
        return variable(var_id(name), exponent);
    }
    static LaurentPolynomial monomial(const Monomial& m, const Rational& c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit()); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff.is_one(); }
    Rational constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;  // largest monomial; requires nonzero

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial scaled(const Rational& c) const;
    LaurentPolynomial times_monomial(const Monomial& m, const Rational& c) const;

    /// Nonnegative exponents always; negative exponents only for monomials.
    LaurentPolynomial pow(long e) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    /// gcd of all coefficients (positive), 0 for the zero polynomial.
    Rational content() const;
    /// Per-variable minimum exponent over all terms (the largest monomial
    /// dividing every term in the Laurent sense). Unit for the zero polynomial.
    Monomial monomial_content() const;
    LaurentPolynomial divided_by_monomial(const Monomial& m) const;

    void collect_vars(std::vector<int32_t>& out) const;

    Rational evaluate(const std::map<int32_t, Rational>& assignment) const;

    std::string str() const;

  private:
    std::vector<Term> terms_;  // sorted descending by compare(), no zero coeffs
};

/// Quotient r with q*r == p, verified by multiplication. Throws NotDivisible.
LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q);

}  // namespace bethesym
