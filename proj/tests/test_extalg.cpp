#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhyper/extalg.hpp"
#include "qhyper/hyperalg.hpp"
#include "qhyper/qmatrix.hpp"
#include "qhyper/qseries.hpp"

using namespace qhyper;

namespace {

ExtElem x_of(std::vector<std::vector<int>> slots) {
    return ExtElem::term(ExtMono::of(std::move(slots)), NCPoly::one());
}

std::mt19937_64 rng(0x5eed0002u);

ExtElem random_elem(int arity, int cap, int deg) {
    std::uniform_int_distribution<int> nterms(1, 3), coeff(-3, 3);
    ExtElem e(static_cast<size_t>(arity));
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<std::vector<int>> slots;
        for (int s = 0; s < arity; ++s) {
            auto subs = all_subsets(cap, deg);
            std::uniform_int_distribution<size_t> pick(0, subs.size() - 1);
            slots.push_back(subs[pick(rng)]);
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        e.add_term(ExtMono::of(std::move(slots)), NCPoly::scalar(RationalFn(c)));
    }
    return e;
}

} // namespace

TEST_CASE("degree-1 wedge rules") {
    CHECK(wedge(x_of({{2}}), x_of({{1}})) ==
          ExtElem::term(ExtMono::of({{1, 2}}), NCPoly::scalar(RationalFn::neg_q_power(1))));
    CHECK(wedge(x_of({{1}}), x_of({{1}})).is_zero());
    // Oracle: reduce x_1 ^ x_3 ^ x_2 stepwise: swapping the last two letters
    // costs one factor -q.
    CHECK(wedge(x_of({{1, 3}}), x_of({{2}})) ==
          ExtElem::term(ExtMono::of({{1, 2, 3}}), NCPoly::scalar(RationalFn::neg_q_power(1))));
}

TEST_CASE("anticommutation on degree-1 monomials") {
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            ExtElem lhs = wedge(x_of({{j}}), x_of({{i}}));
            ExtElem rhs = wedge(x_of({{i}}), x_of({{j}})).scaled(RationalFn::neg_q_power(1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("overlapping slots vanish") {
    CHECK(wedge(x_of({{1, 2}, {3}}), x_of({{2}, {1}})).is_zero());
    ExtElem full = x_of({{1, 2}});
    CHECK(wedge(full, x_of({{2}})).is_zero());
    // Disjoint in every slot: survives with the slotwise sign.
    CHECK(!wedge(x_of({{1, 2}, {3}}), x_of({{3}, {1}})).is_zero());
}

TEST_CASE("wedge associativity on random small elements") {
    for (int it = 0; it < 20; ++it) {
        ExtElem a = random_elem(2, 4, 1), b = random_elem(2, 4, 1), c = random_elem(2, 4, 1);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("square of a sum of two letters") {
    ExtElem s = x_of({{1}}) + x_of({{2}});
    ExtElem sq = wedge(s, s);
    // x1x2 + x2x1 = (1 - q) x_{12}
    ExtElem expect = ExtElem::term(ExtMono::of({{1, 2}}),
                                   NCPoly::scalar(RationalFn(1) - RationalFn::q_power(1)));
    CHECK(sq == expect);
    CHECK(wedge_power(s, 2) == expect);
    CHECK(wedge_power(s, 3).is_zero());
}

TEST_CASE("omega_vector layouts") {
    HyperAlgebra m2{HyperShape::cubical(2, 2), 0, 'a'};
    auto om = omega_vector(m2, 1);
    REQUIRE(om.size() == 2);
    ExtElem expect = ExtElem::term(ExtMono::of({{1}}), NCPoly::gen(gen_a({1, 1}))) +
                     ExtElem::term(ExtMono::of({{2}}), NCPoly::gen(gen_a({1, 2})));
    CHECK(om[0] == expect);

    // 2x2x2, axis 2: omega_1 = sum_{j1,j3} a[j1,1,j3] x_{j1} (x) x_{j3},
    // alpha running lexicographically.
    HyperAlgebra m3{HyperShape::cubical(2, 3), 0, 'a'};
    auto om2 = omega_vector(m3, 2);
    ExtElem w1(2);
    for (int j1 = 1; j1 <= 2; ++j1)
        for (int j3 = 1; j3 <= 2; ++j3)
            w1.add_term(ExtMono::of({{j1}, {j3}}), NCPoly::gen(gen_a({j1, 1, j3})));
    CHECK(om2[0] == w1);
}

TEST_CASE("coeff_of omega wedges gives quantum determinants") {
    // n = 2, m = 2: coefficient of x_{12} in w1 ^ w2 is the row determinant.
    HyperAlgebra m2{HyperShape::cubical(2, 2), 0, 'a'};
    auto om = omega_vector(m2, 1);
    ExtElem w = wedge(om[0], om[1]);
    NCPoly c = coeff_of(w, top_mono_omitting(m2.shape, 1));
    CHECK(c == det_q_row(2));
    CHECK(coeff_of(w, ExtMono::of({{1}})).is_zero());

    // n = 3: six-term S_3 expansion.
    HyperAlgebra m23{HyperShape::cubical(3, 2), 0, 'a'};
    auto om3 = omega_vector(m23, 1);
    ExtElem w3 = wedge(wedge(om3[0], om3[1]), om3[2]);
    CHECK(coeff_of(w3, top_mono_omitting(m23.shape, 1)) == det_q_row(3));
}

TEST_CASE("column vectors give the column determinant") {
    HyperAlgebra m2{HyperShape::cubical(2, 2), 0, 'a'};
    auto om = omega_vector(m2, 2);
    ExtElem w = wedge(om[0], om[1]);
    CHECK(coeff_of(w, top_mono_omitting(m2.shape, 2)) == det_q_col(2));
}

TEST_CASE("realignment examples") {
    HyperShape s{HyperShape::cubical(2, 4)};
    auto [i, alpha] = realign_index(s, 2, {2, 2, 1, 2});
    CHECK(i == 2);
    CHECK(alpha == std::vector<int>{2, 1, 2});
    auto [i1, a1] = realign_index(s, 1, {1, 2, 2, 1});
    CHECK(i1 == 1);
    CHECK(a1 == std::vector<int>{2, 2, 1});
    for (auto& ix : all_indices(s)) {
        auto [row, al] = realign_index(s, 2, ix);
        CHECK(realign_index_inverse(s, 2, row, al) == ix);
    }
    // Row 2 of the second realignment of the 2x2x2x2 hypermatrix, in
    // lexicographic alpha order.
    HyperAlgebra alg{s, 0, 'a'};
    auto om = omega_vector(alg, 2);
    std::vector<std::vector<int>> expected = {{1, 2, 1, 1}, {1, 2, 1, 2}, {1, 2, 2, 1}, {1, 2, 2, 2},
                                              {2, 2, 1, 1}, {2, 2, 1, 2}, {2, 2, 2, 1}, {2, 2, 2, 2}};
    size_t pos = 0;
    auto alphas = all_indices_omitting(s, 2);
    for (auto& alpha2 : alphas) {
        std::vector<std::vector<int>> slots;
        for (int v : alpha2) slots.push_back({v});
        NCPoly c = coeff_of(om[1], ExtMono::of(std::move(slots)));
        REQUIRE(c.size() == 1);
        CHECK(c.leading_word().letters[0].index == expected[pos]);
        ++pos;
    }
}

TEST_CASE("top wedge coefficient is the fixed-axis hyperdeterminant") {
    for (int n : {2, 3})
        for (int m : {2, 3}) {
            HyperAlgebra alg{HyperShape::cubical(n, m), 0, 'a'};
            for (int axis = 1; axis <= m; ++axis) {
                auto om = omega_vector(alg, axis);
                ExtElem w = om[0];
                for (int i = 1; i < n; ++i) w = wedge(w, om[static_cast<size_t>(i)]);
                CHECK(coeff_of(w, top_mono_omitting(alg.shape, axis)) == hyperdet_fixed(alg, axis));
            }
        }
}

TEST_CASE("alpha_rank is the lexicographic position") {
    HyperShape s{HyperShape::cubical(2, 3)};
    auto alphas = all_indices_omitting(s, 2);
    for (size_t r = 0; r < alphas.size(); ++r) CHECK(alpha_rank(s, 2, alphas[r]) == static_cast<long>(r));
}
