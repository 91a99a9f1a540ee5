#include "qhyper/laurent.hpp"

#include <sstream>

namespace qhyper {

LaurentV make_laurent(std::map<long, Int> t) {
    LaurentV r;
    for (auto& [e, c] : t)
        if (c != 0) r.terms_.emplace(e, std::move(c));
    return r;
}

LaurentV LaurentV::monomial(Int c, long vexp) {
    LaurentV r;
    r.set(vexp, std::move(c));
    return r;
}

LaurentV LaurentV::neg_q_power(long k) {
    Int c = (k % 2 == 0) ? Int(1) : Int(-1);
    return monomial(c, 2 * k);
}

bool LaurentV::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentV::even_exponents_only() const {
    for (auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

long LaurentV::low_exp() const {
    if (is_zero()) throw domain_error("low_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentV::high_exp() const {
    if (is_zero()) throw domain_error("high_exp of zero polynomial");
    return terms_.rbegin()->first;
}

const Int& LaurentV::leading_coeff() const {
    if (is_zero()) throw domain_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

const Int& LaurentV::trailing_coeff() const {
    if (is_zero()) throw domain_error("trailing_coeff of zero polynomial");
    return terms_.begin()->second;
}

LaurentV LaurentV::operator-() const {
    LaurentV r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentV LaurentV::operator+(const LaurentV& o) const {
    LaurentV r = *this;
    for (auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentV LaurentV::operator-(const LaurentV& o) const { return *this + (-o); }

LaurentV LaurentV::operator*(const LaurentV& o) const {
    LaurentV r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                Int p = c1 * c2;
                if (p != 0) r.terms_.emplace(e1 + e2, std::move(p));
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentV LaurentV::shifted(long dexp) const {
    LaurentV r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e + dexp, c);
    return r;
}

LaurentV LaurentV::scaled(const Int& k) const {
    LaurentV r;
    if (k == 0) return r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

Rat LaurentV::eval_v(const Rat& v0) const {
    Rat acc(0);
    if (v0 == 0) {
        for (auto& [e, c] : terms_) {
            if (e < 0) throw eval_error("negative exponent at v = 0");
            if (e == 0) acc += Rat(c);
        }
        return acc;
    }
    for (auto& [e, c] : terms_) {
        Rat p;
        unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(p.get_num_mpz_t(), v0.get_num().get_mpz_t(), ae);
        mpz_pow_ui(p.get_den_mpz_t(), v0.get_den().get_mpz_t(), ae);
        p.canonicalize();
        if (e < 0) p = 1 / p;
        acc += Rat(c) * p;
    }
    return acc;
}

Int content(const LaurentV& a) {
    Int g(0);
    for (auto& [e, c] : a.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {

// Dense view of the polynomial part (exponents shifted to start at 0).
struct Dense {
    std::vector<Int> c;  // c[i] = coefficient of v^i
    long deg() const { return static_cast<long>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
};

Dense to_dense(const LaurentV& a) {
    Dense d;
    if (a.is_zero()) return d;
    long lo = a.low_exp(), hi = a.high_exp();
    d.c.assign(static_cast<size_t>(hi - lo + 1), Int(0));
    for (auto& [e, k] : a.terms()) d.c[static_cast<size_t>(e - lo)] = k;
    return d;
}

LaurentV from_dense(const Dense& d, long shift) {
    std::map<long, Int> t;
    for (size_t i = 0; i < d.c.size(); ++i)
        if (d.c[i] != 0) t[static_cast<long>(i) + shift] = d.c[i];
    return make_laurent(std::move(t));
}

void make_primitive(Dense& d) {
    if (d.zero()) return;
    Int g(0);
    for (auto& k : d.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    if (d.c.back() < 0) g = -g;
    if (g != 1)
        for (auto& k : d.c) mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Dense pseudo_rem(Dense a, const Dense& b) {
    const Int& lb = b.c.back();
    long db = b.deg();
    while (!a.zero() && a.deg() >= db) {
        Int la = a.c.back();
        long da = a.deg();
        for (auto& k : a.c) k *= lb;
        for (long i = 0; i <= db; ++i)
            a.c[static_cast<size_t>(da - db + i)] -= la * b.c[static_cast<size_t>(i)];
        a.trim();
    }
    return a;
}

} // namespace

LaurentV laurent_gcd(const LaurentV& a, const LaurentV& b) {
    if (a.is_zero() && b.is_zero()) return LaurentV();
    if (a.is_zero()) return laurent_gcd(b, b);
    Dense da = to_dense(a), db = b.is_zero() ? Dense{} : to_dense(b);
    make_primitive(da);
    make_primitive(db);
    if (db.zero()) return from_dense(da, 0);
    if (da.deg() < db.deg()) std::swap(da, db);
    while (!db.zero()) {
        Dense r = pseudo_rem(da, db);
        make_primitive(r);
        da = std::move(db);
        db = std::move(r);
    }
    make_primitive(da);
    return from_dense(da, 0);
}

LaurentV laurent_divexact(const LaurentV& a, const LaurentV& b) {
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    if (a.is_zero()) return LaurentV();
    long shift = a.low_exp() - b.low_exp();
    Dense da = to_dense(a), db = to_dense(b);
    Dense quo;
    quo.c.assign(da.c.size(), Int(0));
    while (!da.zero() && da.deg() >= db.deg()) {
        Int q = da.c.back() / db.c.back();
        if (q * db.c.back() != da.c.back())
            throw domain_error("laurent_divexact: not divisible");
        long off = da.deg() - db.deg();
        quo.c[static_cast<size_t>(off)] = q;
        for (long i = 0; i <= db.deg(); ++i)
            da.c[static_cast<size_t>(off + i)] -= q * db.c[static_cast<size_t>(i)];
        da.trim();
    }
    if (!da.zero()) throw domain_error("laurent_divexact: not divisible");
    quo.trim();
    return from_dense(quo, shift);
}

std::string LaurentV::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ac == 1);
        if (e == 0) {
            os << ac.get_str();
        } else {
            if (!unit) os << ac.get_str() << "*";
            if (e == 2) {
                os << "q";
            } else if (e % 2 == 0) {
                os << "q^" << (e / 2);
            } else {
                os << "q^(" << e << "/2)";
            }
        }
    }
    return os.str();
}

} // namespace qhyper
