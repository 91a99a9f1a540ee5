#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhyper/qseries.hpp"

using namespace qhyper;

namespace {

LaurentV q_poly(std::initializer_list<std::pair<long, long>> qexp_coeff) {
    std::map<long, Int> t;
    for (auto& [e, c] : qexp_coeff) t[2 * e] = Int(c);
    return make_laurent(std::move(t));
}

std::mt19937_64 rng(20240821u);

LaurentV random_laurent(bool nonzero = false) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), coeff(-9, 9);
    for (;;) {
        std::map<long, Int> t;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) t[exp(rng)] = Int(coeff(rng));
        LaurentV r = make_laurent(std::move(t));
        if (!nonzero || !r.is_zero()) return r;
    }
}

RationalFn random_ratfn() { return RationalFn(random_laurent(), random_laurent(true)); }

Rat random_square_q0() {
    std::uniform_int_distribution<int> num(2, 7), den(1, 5);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r * r;
}

long binomial(long n, long t) {
    long r = 1;
    for (long i = 0; i < t; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("qnum examples") {
    CHECK(qnum(3, 1) == q_poly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(qnum(1, 4) == LaurentV(1));
    CHECK(qnum(2, 2) == q_poly({{0, 1}, {2, 1}}));
    CHECK(qnum(0, 1).is_zero());
    CHECK_THROWS_AS(qnum(-1, 1), domain_error);
}

TEST_CASE("qfact and qbinom examples") {
    CHECK(qfact(2, 1) == q_poly({{0, 1}, {1, 1}}));
    CHECK(qfact(0, 3) == LaurentV(1));
    RationalFn b21 = qbinom(2, 1, 1);
    CHECK(b21.den_is_one());
    CHECK(b21.num() == q_poly({{0, 1}, {1, 1}}));
    // Oracle for the evaluated Gaussian binomial: the ordinary binomial.
    CHECK(eval_at(qbinom(4, 2, 1), Rat(1)) == Rat(binomial(4, 2)));
    CHECK_THROWS_AS(qbinom(2, 3, 1), domain_error);
}

TEST_CASE("qbinom is a polynomial for all 0 <= t <= n <= 8") {
    for (long n = 0; n <= 8; ++n)
        for (long t = 0; t <= n; ++t)
            for (long b : {1L, 2L, 4L}) CHECK(qbinom(n, t, b).den_is_one());
}

TEST_CASE("eval_at examples") {
    RationalFn x(q_poly({{0, 1}, {1, -1}}), q_poly({{0, 1}, {2, 1}}));  // (1-q)/(1+q^2)
    CHECK(eval_at(x, Rat(1)) == Rat(0));
    CHECK(eval_at(RationalFn(qnum(3, 1)), Rat(2)) == Rat(7));
    RationalFn pole(LaurentV(1), q_poly({{0, 1}, {1, -1}}));  // 1/(1-q)
    CHECK_THROWS_AS(eval_at(pole, Rat(1)), eval_error);
    CHECK(pole.can_eval_at_q(Rat(2)));
    CHECK(!pole.can_eval_at_q(Rat(1)));
}

TEST_CASE("odd powers of v need square q0") {
    RationalFn half = RationalFn::v_power(1);  // q^(1/2)
    CHECK_THROWS_AS(eval_at(half, Rat(2)), eval_error);
    CHECK(eval_at(half, Rat(4, 9)) == Rat(2, 3));
    CHECK(eval_at(RationalFn::v_power(-3), Rat(4)) == Rat(1, 8));
}

TEST_CASE("(q-1)[n]_q = q^n - 1") {
    LaurentV qm1 = q_poly({{1, 1}, {0, -1}});
    for (long n = 0; n <= 12; ++n) {
        LaurentV rhs = q_poly({{n, 1}}) - LaurentV(1);
        CHECK(qm1 * qnum(n, 1) == rhs);
    }
}

TEST_CASE("qbinom symmetry") {
    for (long n = 0; n <= 8; ++n)
        for (long t = 0; t <= n; ++t)
            for (long b : {1L, 2L, 4L}) CHECK(qbinom(n, t, b) == qbinom(n, n - t, b));
}

TEST_CASE("q-Pascal recurrence") {
    for (long n = 2; n <= 8; ++n)
        for (long t = 1; t < n; ++t) {
            RationalFn lhs = qbinom(n, t, 1);
            RationalFn rhs = qbinom(n - 1, t - 1, 1) + RationalFn::q_power(t) * qbinom(n - 1, t, 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("evaluation is a ring homomorphism on random inputs") {
    for (int it = 0; it < 60; ++it) {
        RationalFn x = random_ratfn(), y = random_ratfn();
        Rat q0 = random_square_q0();
        if (!x.can_eval_at_q(q0) || !y.can_eval_at_q(q0)) continue;
        CHECK(eval_at(x + y, q0) == eval_at(x, q0) + eval_at(y, q0));
        CHECK(eval_at(x * y, q0) == eval_at(x, q0) * eval_at(y, q0));
    }
}

TEST_CASE("canonical form uniqueness") {
    for (int it = 0; it < 60; ++it) {
        RationalFn x = random_ratfn();
        CHECK((x - x).is_zero());
        CHECK(x - x == RationalFn());
        if (!x.is_zero()) CHECK(x / x == RationalFn(1));
    }
    // A non-normalized constructor input lands in the same canonical form.
    RationalFn a(q_poly({{1, 2}, {2, 2}}), q_poly({{0, 4}}));   // (2q+2q^2)/4
    RationalFn b(q_poly({{1, 1}, {2, 1}}), q_poly({{0, 2}}));   // (q+q^2)/2
    CHECK(a == b);
    CHECK(a.den().trailing_coeff() > 0);
    CHECK(a.den().low_exp() == 0);
}
