#pragma once

#include "qhyper/ratfn.hpp"

namespace qhyper {

// [n]_{q^base} = 1 + q^base + ... + q^{base(n-1)}; [0] = 0.
LaurentV qnum(long n, long base = 1);

// [n]_{q^base}! = [1][2]...[n]; [0]! = 1.
LaurentV qfact(long n, long base = 1);

// Gaussian binomial [n choose t]_{q^base}; always a polynomial (denominator
// normalizes to 1).  Throws domain_error unless 0 <= t <= n.
RationalFn qbinom(long n, long t, long base = 1);

// Exact specialization of a rational function at q = q0.
Rat eval_at(const RationalFn& x, const Rat& q0);

} // namespace qhyper
