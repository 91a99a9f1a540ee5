#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "qhyper/error.hpp"

namespace qhyper {

using Int = mpz_class;
using Rat = mpq_class;

// Laurent polynomial in the variable v, with v^2 = q.  Exponents are
// v-exponents: even exponents are integer powers of q, odd ones are the
// half-integer powers of q needed by the coproduct weight factors.
// Canonical form: no zero coefficients stored.
class LaurentV {
public:
    LaurentV() = default;
    explicit LaurentV(long c) { if (c != 0) terms_[0] = Int(c); }
    explicit LaurentV(const Int& c) { if (c != 0) terms_[0] = c; }

    static LaurentV monomial(Int c, long vexp);
    // q^k as a Laurent polynomial (v-exponent 2k).
    static LaurentV q_power(long k) { return monomial(Int(1), 2 * k); }
    static LaurentV v_power(long k) { return monomial(Int(1), k); }
    // (-q)^k, k may be negative.
    static LaurentV neg_q_power(long k);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // True when every stored exponent is even (a genuine polynomial in q).
    bool even_exponents_only() const;

    long low_exp() const;
    long high_exp() const;
    const Int& leading_coeff() const;   // coefficient of high_exp()
    const Int& trailing_coeff() const;  // coefficient of low_exp()
    const std::map<long, Int>& terms() const { return terms_; }

    LaurentV operator-() const;
    LaurentV operator+(const LaurentV& o) const;
    LaurentV operator-(const LaurentV& o) const;
    LaurentV operator*(const LaurentV& o) const;
    LaurentV& operator+=(const LaurentV& o) { *this = *this + o; return *this; }
    LaurentV& operator-=(const LaurentV& o) { *this = *this - o; return *this; }
    LaurentV& operator*=(const LaurentV& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentV& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentV& o) const { return !(*this == o); }
    bool operator<(const LaurentV& o) const { return terms_ < o.terms_; }

    LaurentV shifted(long dexp) const;  // multiply by v^dexp
    LaurentV scaled(const Int& c) const;

    // Substitute v = v0 exactly.  v0 = 0 requires all exponents >= 0.
    Rat eval_v(const Rat& v0) const;

    std::string to_string() const;  // "1 - q^2", "q^(1/2)", ...

private:
    std::map<long, Int> terms_;
    void set(long e, Int c) { if (c != 0) terms_[e] = std::move(c); }
    friend LaurentV make_laurent(std::map<long, Int> t);
};

LaurentV make_laurent(std::map<long, Int> t);

// gcd of all coefficients, always nonnegative; 0 for the zero polynomial.
Int content(const LaurentV& a);

// Primitive gcd over Z[v] of the shifted polynomial parts, with positive
// leading coefficient.  gcd(0, b) = primitive part of b.
LaurentV laurent_gcd(const LaurentV& a, const LaurentV& b);

// Exact division; throws domain_error if b does not divide a.
LaurentV laurent_divexact(const LaurentV& a, const LaurentV& b);

} // namespace qhyper
