#include "qhyper/qseries.hpp"

namespace qhyper {

LaurentV qnum(long n, long base) {
    if (n < 0) throw domain_error("qnum: n must be nonnegative");
    if (base < 1) throw domain_error("qnum: base must be positive");
    std::map<long, Int> t;
    for (long i = 0; i < n; ++i) t[2 * base * i] = Int(1);
    return make_laurent(std::move(t));
}

LaurentV qfact(long n, long base) {
    if (n < 0) throw domain_error("qfact: n must be nonnegative");
    LaurentV r(1);
    for (long i = 1; i <= n; ++i) r *= qnum(i, base);
    return r;
}

RationalFn qbinom(long n, long t, long base) {
    if (t < 0 || t > n) throw domain_error("qbinom: requires 0 <= t <= n");
    return RationalFn(qfact(n, base), qfact(t, base) * qfact(n - t, base));
}

Rat eval_at(const RationalFn& x, const Rat& q0) { return x.eval_at_q(q0); }

} // namespace qhyper
