#pragma once

#include <optional>
#include <string>

#include "qhyper/laurent.hpp"

namespace qhyper {

// Element of the fraction field of Z[v, v^-1].  Canonical form: num/den with
// polynomial gcd 1, coprime integer contents, den a polynomial in v with
// nonzero constant term and positive leading coefficient.  Equality is
// structural equality of the canonical form.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}
    RationalFn(const Int& c) : num_(c), den_(1) {}
    RationalFn(LaurentV n) : num_(std::move(n)), den_(1) {}
    RationalFn(LaurentV n, LaurentV d);

    static RationalFn q_power(long k) { return RationalFn(LaurentV::q_power(k)); }
    static RationalFn v_power(long k) { return RationalFn(LaurentV::v_power(k)); }
    static RationalFn neg_q_power(long k) { return RationalFn(LaurentV::neg_q_power(k)); }

    const LaurentV& num() const { return num_; }
    const LaurentV& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool den_is_one() const { return den_.is_one(); }

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn& operator+=(const RationalFn& o) { *this = *this + o; return *this; }
    RationalFn& operator-=(const RationalFn& o) { *this = *this - o; return *this; }
    RationalFn& operator*=(const RationalFn& o) { *this = *this * o; return *this; }
    RationalFn& operator/=(const RationalFn& o) { *this = *this / o; return *this; }

    RationalFn inverse() const;

    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }
    bool operator<(const RationalFn& o) const;

    // Exact evaluation at q = q0.  Odd v-exponents require q0 to be the
    // square of a rational; a vanishing denominator is a pole.
    Rat eval_at_q(const Rat& q0) const;
    // True iff eval_at_q would succeed.
    bool can_eval_at_q(const Rat& q0) const;

    std::string to_string() const;

private:
    LaurentV num_, den_;
    void normalize();
};

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rat> rational_sqrt(const Rat& x);

} // namespace qhyper
