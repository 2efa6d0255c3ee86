#include "bethesym/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace bethesym {

namespace {

// Fixed universe registered at startup so canonical term order and golden
// serializations do not depend on which computation ran first.
const char* const kStandardVars[] = {
    "u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8",
    "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8",
    "w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8",
    "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8",
    "y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8",
    "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8",
    "q",  "q1", "q2", "q3", "q4", "q5", "q6", "q7", "q8",
    "p",  "beta", "t",  "u",  "v",  "w",  "z",
    "alpha0", "alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6",
    "alpha7", "alpha8", "alpha9", "alpha10", "alpha11", "alpha12",
    "gamma0", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5", "gamma6",
    "gamma7", "gamma8", "gamma9", "gamma10", "gamma11", "gamma12",
};

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

VarRegistry::VarRegistry() {
    for (const char* n : kStandardVars) {
        ids_.emplace(n, static_cast<int>(names_.size()));
        names_.emplace_back(n);
    }
}

VarRegistry& VarRegistry::instance() {
    static VarRegistry reg;
    return reg;
}

int VarRegistry::id(const std::string& name) {
    std::lock_guard lock(registry_mutex());
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
}

const std::string& VarRegistry::name(int id) const {
    std::lock_guard lock(registry_mutex());
    return names_.at(static_cast<std::size_t>(id));
}

int VarRegistry::size() const {
    std::lock_guard lock(registry_mutex());
    return static_cast<int>(names_.size());
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first)) {
            r.factors.push_back(factors[i++]);
        } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
            r.factors.push_back(o.factors[j++]);
        } else {
            int32_t e = factors[i].second + o.factors[j].second;
            if (e != 0) r.factors.push_back({factors[i].first, e});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& [v, e] : r.factors) e = -e;
    return r;
}

Monomial Monomial::pow(long e) const {
    Monomial r = *this;
    if (e == 0) return Monomial{};
    for (auto& [v, ex] : r.factors) ex = static_cast<int32_t>(ex * e);
    return r;
}

int compare(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        int32_t va = i < a.factors.size() ? a.factors[i].first : INT32_MAX;
        int32_t vb = j < b.factors.size() ? b.factors[j].first : INT32_MAX;
        int32_t ea = 0, eb = 0;
        if (va <= vb) ea = a.factors[i].second;
        if (vb <= va) eb = b.factors[j].second;
        if (va < vb) {
            if (ea != 0) return ea > 0 ? 1 : -1;
            ++i;
        } else if (vb < va) {
            if (eb != 0) return eb > 0 ? -1 : 1;
            ++j;
        } else {
            if (ea != eb) return ea > eb ? 1 : -1;
            ++i;
            ++j;
        }
    }
    return 0;
}

// ------------------------------------------------------- LaurentPolynomial

LaurentPolynomial LaurentPolynomial::variable(int var, int exponent) {
    if (exponent == 0) return LaurentPolynomial(1);
    LaurentPolynomial p;
    Monomial m;
    m.factors.push_back({var, exponent});
    p.terms_.push_back({m, Rational(1)});
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Monomial& m, const Rational& c) {
    LaurentPolynomial p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Rational LaurentPolynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_[0].coeff;
}

const LaurentPolynomial::Term& LaurentPolynomial::leading_term() const {
    return terms_.front();
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i == terms_.size()) c = -1;
        else if (j == o.terms_.size()) c = 1;
        else c = compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.is_monomial()) return times_monomial(o.terms_[0].mono, o.terms_[0].coeff);
    if (is_monomial()) return o.times_monomial(terms_[0].mono, terms_[0].coeff);
    struct Cmp {
        bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    };
    std::map<Monomial, Rational, Cmp> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, fresh] = acc.try_emplace(std::move(m), a.coeff * b.coeff);
            if (!fresh) it->second += a.coeff * b.coeff;
        }
    LaurentPolynomial r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

LaurentPolynomial LaurentPolynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return {};
    LaurentPolynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the term order
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(long e) const {
    if (e == 0) return LaurentPolynomial(1);
    if (e < 0) {
        if (!is_monomial()) throw Error("negative power of a non-monomial Laurent polynomial");
        return LaurentPolynomial::monomial(terms_[0].mono.pow(e), terms_[0].coeff.pow(e));
    }
    LaurentPolynomial base = *this, acc(1);
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Rational LaurentPolynomial::content() const {
    Rational g(0);
    for (const auto& t : terms_) g = Rational::gcd(g, t.coeff);
    return g;
}

Monomial LaurentPolynomial::monomial_content() const {
    if (terms_.empty()) return {};
    std::vector<int32_t> vars;
    collect_vars(vars);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Monomial g;
    for (int32_t v : vars) {
        int32_t m = terms_[0].mono.exponent_of(v);
        for (const auto& t : terms_) m = std::min(m, t.mono.exponent_of(v));
        if (m != 0) g.factors.push_back({v, m});
    }
    return g;
}

LaurentPolynomial LaurentPolynomial::divided_by_monomial(const Monomial& m) const {
    return times_monomial(m.inverse(), Rational(1));
}

void LaurentPolynomial::collect_vars(std::vector<int32_t>& out) const {
    for (const auto& t : terms_)
        for (auto& [v, e] : t.mono.factors) out.push_back(v);
}

Rational LaurentPolynomial::evaluate(const std::map<int32_t, Rational>& assignment) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational term = t.coeff;
        for (auto& [v, e] : t.mono.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw MissingVariable("no value for variable " + var_name(v));
            if (it->second.is_zero() && e < 0)
                throw SingularPoint("negative power of zero for variable " + var_name(v));
            term *= it->second.pow(e);
        }
        acc += term;
    }
    return acc;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        const bool unit_mono = t.mono.is_unit();
        const bool unit_coeff = c.is_one();
        if (unit_mono || !unit_coeff) {
            os << c.str();
            if (!unit_mono) os << "*";
        }
        bool firstv = true;
        for (auto& [v, e] : t.mono.factors) {
            if (!firstv) os << "*";
            firstv = false;
            os << var_name(v);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (q.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
    if (p.is_zero()) return {};
    if (q.is_monomial())
        return p.times_monomial(q.terms()[0].mono.inverse(), q.terms()[0].coeff.reciprocal());

    // Leading-term reduction. For an exact quotient each step strips one term
    // of it, so the step count is bounded; the bound below only cuts off
    // non-terminating inexact divisions in the Laurent ring.
    const std::size_t cap = 64 + p.term_count() * (q.term_count() + 4) * 16;
    LaurentPolynomial rem = p, quot;
    const auto& qlt = q.leading_term();
    std::size_t steps = 0;
    while (!rem.is_zero()) {
        if (++steps > cap) throw NotDivisible();
        const auto& rlt = rem.leading_term();
        Monomial m = rlt.mono * qlt.mono.inverse();
        Rational c = rlt.coeff / qlt.coeff;
        quot += LaurentPolynomial::monomial(m, c);
        rem -= q.times_monomial(m, c);
    }
    if (!(quot * q == p)) throw NotDivisible();
    return quot;
}

}  // namespace bethesym
