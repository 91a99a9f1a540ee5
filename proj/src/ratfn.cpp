#include "qhyper/ratfn.hpp"

#include <sstream>

namespace qhyper {

RationalFn::RationalFn(LaurentV n, LaurentV d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw domain_error("RationalFn: zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentV(1);
        return;
    }
    long shift = num_.low_exp() - den_.low_exp();
    LaurentV n = num_.shifted(-num_.low_exp());
    LaurentV d = den_.shifted(-den_.low_exp());
    LaurentV g = laurent_gcd(n, d);
    if (!g.is_one()) {
        n = laurent_divexact(n, g);
        d = laurent_divexact(d, g);
    }
    Int cn = content(n), cd = content(d), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (d.leading_coeff() < 0) c = -c;
    if (c != 1) {
        std::map<long, Int> tn, td;
        for (auto& [e, k] : n.terms()) tn[e] = k / c;
        for (auto& [e, k] : d.terms()) td[e] = k / c;
        n = make_laurent(std::move(tn));
        d = make_laurent(std::move(td));
    }
    num_ = n.shifted(shift);
    den_ = d;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFn(num_ + o.num_, den_);
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
    if (is_zero() || o.is_zero()) return RationalFn();
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw domain_error("RationalFn: inverse of zero");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const { return *this * o.inverse(); }

bool RationalFn::operator<(const RationalFn& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    Rat r;
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(x.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(r.get_num_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), x.get_den().get_mpz_t());
    r.canonicalize();
    return r;
}

bool RationalFn::can_eval_at_q(const Rat& q0) const {
    bool odd = !num_.even_exponents_only() || !den_.even_exponents_only();
    Rat v0;
    if (odd) {
        auto s = rational_sqrt(q0);
        if (!s) return false;
        v0 = *s;
    } else {
        v0 = q0;
    }
    if (v0 == 0) {
        if (!num_.is_zero() && num_.low_exp() < 0) return false;
        if (den_.low_exp() < 0) return false;
    }
    // When exponents are all even we evaluate at q0 directly, halving them.
    auto value = [&](const LaurentV& p) {
        if (odd) return p.eval_v(v0);
        LaurentV half;
        std::map<long, Int> t;
        for (auto& [e, c] : p.terms()) t[e / 2] = c;
        return make_laurent(std::move(t)).eval_v(q0);
    };
    return value(den_) != 0;
}

Rat RationalFn::eval_at_q(const Rat& q0) const {
    bool odd = !num_.even_exponents_only() || !den_.even_exponents_only();
    Rat v0;
    if (odd) {
        auto s = rational_sqrt(q0);
        if (!s)
            throw eval_error("eval_at_q: odd power of v requires q0 to be a rational square");
        v0 = *s;
    }
    auto value = [&](const LaurentV& p) {
        if (odd) return p.eval_v(v0);
        std::map<long, Int> t;
        for (auto& [e, c] : p.terms()) t[e / 2] = c;
        return make_laurent(std::move(t)).eval_v(q0);
    };
    Rat d = value(den_);
    if (d == 0) throw eval_error("eval_at_q: pole at q0");
    return value(num_) / d;
}

std::string RationalFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

} // namespace qhyper
