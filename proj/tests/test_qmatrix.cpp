#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "qhyper/qmatrix.hpp"
#include "qhyper/qseries.hpp"

using namespace qhyper;

namespace {

NCPoly A(int i, int j, int comp = 0) { return NCPoly::gen(GenId{comp, 'a', {i, j}}); }

std::mt19937_64 rng(0x5eed0003u);

Word random_word(int n, int len, int components) {
    std::uniform_int_distribution<int> idx(1, n), comp(0, components - 1);
    std::vector<GenId> ls;
    for (int i = 0; i < len; ++i) ls.push_back(GenId{comp(rng), 'a', {idx(rng), idx(rng)}});
    return Word::of(std::move(ls));
}

// (AB)_{ij} with A in component 0 and B in component 1.
NCPoly product_entry(int n, int i, int j) {
    NCPoly e;
    for (int k = 1; k <= n; ++k) e += A(i, k, 0) * NCPoly::gen(GenId{1, 'b', {k, j}});
    return e;
}

NCPoly det_of_entries(int n, const std::function<NCPoly(int, int)>& entry) {
    NCPoly det;
    for (auto& s : all_perms(n)) {
        NCPoly term = NCPoly::scalar(RationalFn::neg_q_power(inversions(s)));
        for (int i = 1; i <= n; ++i) term *= entry(i, s(i));
        det += term;
    }
    return det;
}

NCPoly det_q_row_b(int n, int comp) {
    NCPoly det;
    for (auto& s : all_perms(n)) {
        std::vector<GenId> ls;
        for (int i = 1; i <= n; ++i) ls.push_back(GenId{comp, 'b', {i, s(i)}});
        det.add_term(Word{std::move(ls)}, RationalFn::neg_q_power(inversions(s)));
    }
    return det;
}

} // namespace

TEST_CASE("relation counts") {
    CHECK(matq_relations(1).empty());
    CHECK(matq_relations(2).size() == 6);   // 2 row + 2 column + 2 mixed
    CHECK(matq_relations(3).size() == 36);  // 9 of each of the four kinds
}

TEST_CASE("normal form reorients the defining relations") {
    QMatrixContext ctx{2, 0};
    CHECK(normal_form(A(1, 2) * A(1, 1), ctx) == RationalFn::q_power(-1) * (A(1, 1) * A(1, 2)));
    NCPoly nf = normal_form(A(2, 2) * A(1, 1), ctx);
    NCPoly expect = A(1, 1) * A(2, 2) -
                    (RationalFn::q_power(1) - RationalFn::q_power(-1)) * (A(1, 2) * A(2, 1));
    CHECK(nf == expect);
    CHECK(normal_form(A(2, 1) * A(1, 2), ctx) == A(1, 2) * A(2, 1));
}

TEST_CASE("every generated relation reduces to zero") {
    for (int n : {2, 3}) {
        QMatrixContext ctx{n, 0};
        for (auto& r : matq_relations(n)) CHECK(normal_form(r, ctx).is_zero());
    }
}

TEST_CASE("normal form is idempotent") {
    for (int it = 0; it < 40; ++it) {
        QMatrixContext ctx{3, 0};
        NCPoly p = NCPoly::monomial(random_word(3, 4, 1), RationalFn(1));
        NCPoly nf = normal_form(p, ctx);
        CHECK(normal_form(nf, ctx) == nf);
    }
}

TEST_CASE("quantum determinants") {
    CHECK(det_q_row(1) == A(1, 1));
    CHECK(det_q_row(2) == A(1, 1) * A(2, 2) - RationalFn::q_power(1) * (A(1, 2) * A(2, 1)));
    // n = 3: six terms, inversion counts 0,1,1,2,2,3.
    NCPoly d3 = det_q_row(3);
    CHECK(d3.size() == 6);
    std::multiset<long> exps;
    for (auto& [w, c] : d3.terms()) {
        REQUIRE(c.den_is_one());
        REQUIRE(c.num().is_monomial());
        exps.insert(c.num().low_exp() / 2);
    }
    CHECK(exps == std::multiset<long>{0, 1, 1, 2, 2, 3});
}

TEST_CASE("row and column determinants agree in normal form") {
    for (int n : {2, 3}) {
        QMatrixContext ctx{n, 0};
        CHECK(normal_form(det_q_row(n) - det_q_col(n), ctx).is_zero());
    }
}

TEST_CASE("confluence probe: randomized reduction order agrees") {
    for (int n : {2, 3}) {
        QMatrixContext ctx{n, 0};
        for (int it = 0; it < 100; ++it) {
            NCPoly p = NCPoly::monomial(random_word(n, 3, 1), RationalFn(1));
            NCPoly a = normal_form(p, ctx);
            NCPoly b = normal_form_random_order(p, n, rng);
            CHECK(a == b);
        }
    }
}

TEST_CASE("coproduct of generators and grouplike determinant") {
    NCPoly d = coproduct_matq(A(1, 1), 2);
    NCPoly expect = A(1, 1, 0) * NCPoly::gen(GenId{1, 'a', {1, 1}}) +
                    A(1, 2, 0) * NCPoly::gen(GenId{1, 'a', {2, 1}});
    CHECK(d == expect);
    CHECK(coproduct_matq(NCPoly::one(), 2) == NCPoly::one());

    for (int n : {2, 3}) {
        QMatrixContext ctx{n, 0};
        NCPoly det = det_q_row(n);
        NCPoly lhs = coproduct_matq(det, n);
        NCPoly rhs = det_q_row(n, 0) * det_q_row(n, 1);
        CHECK(normal_form(lhs - rhs, ctx).is_zero());
    }
}

TEST_CASE("multiplicativity with a second commuting quantum matrix") {
    for (int n : {2}) {
        QMatrixContext ctx{n, 0};
        NCPoly lhs = det_of_entries(n, [&](int i, int j) { return product_entry(n, i, j); });
        NCPoly rhs = det_q_row(n, 0) * det_q_row_b(n, 1);
        NCPoly diff = lhs - rhs;
        // b letters use the same Mat_q rules inside their own component.
        QMatrixContext bctx{n, 1, 'b'};
        (void)bctx;
        CHECK(normal_form(diff, ctx).is_zero());
    }
}

TEST_CASE("interchanging two rows multiplies by -q") {
    for (int n : {2, 3}) {
        QMatrixContext ctx{n, 0};
        for (int s = 1; s < n; ++s) {
            auto tau = [&](int i) { return i == s ? s + 1 : (i == s + 1 ? s : i); };
            // P.A has entries a_{tau(i), j}; the row determinant picks up -q.
            NCPoly lhs = det_of_entries(n, [&](int i, int j) { return A(tau(i), j); });
            NCPoly rhs = RationalFn::neg_q_power(1) * det_q_row(n);
            CHECK(normal_form(lhs - rhs, ctx).is_zero());
            // A.P swaps two columns; the column determinant picks up -q.
            NCPoly cols;
            for (auto& sig : all_perms(n)) {
                NCPoly term = NCPoly::scalar(RationalFn::neg_q_power(inversions(sig)));
                for (int j = 1; j <= n; ++j) term *= A(sig(j), tau(j));
                cols += term;
            }
            CHECK(normal_form(cols - RationalFn::neg_q_power(1) * det_q_col(n), ctx).is_zero());
        }
    }
}
