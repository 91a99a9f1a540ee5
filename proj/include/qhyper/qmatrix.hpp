#pragma once

#include <random>

#include "qhyper/ncalg.hpp"

namespace qhyper {

// Generators a_{ij}, 1 <= i,j <= n, of one quantum-matrix tensor component.
struct QMatrixContext {
    int n = 1;
    int component = 0;
    char name = 'a';

    GenId gen(int i, int j) const;
    std::vector<GenId> all_generators() const;
};

// Defining quadratic relations: same-row and same-column q-commutation for
// every row/column, plus the two mixed relations for every i<j, k<l.
std::vector<NCPoly> matq_relations(int n, int component = 0);

// PBW normal form: within every tensor component, adjacent generator pairs
// are rewritten until nondecreasing in (row, col) order.  All components are
// reduced with the same rule set for size n.  Memoized per call.
NCPoly normal_form(const NCPoly& p, const QMatrixContext& ctx);

// Single-step randomized reduction order, for the confluence probe.
NCPoly normal_form_random_order(const NCPoly& p, int n, std::mt19937_64& rng);

NCPoly det_q_row(int n, int component = 0);
NCPoly det_q_col(int n, int component = 0);

// Algebra-map extension of a_{ij} |-> sum_k a_{ik} (x) a_{kj} into the two
// given tensor components.
NCPoly coproduct_matq(const NCPoly& p, int n, int comp_left = 0, int comp_right = 1);

} // namespace qhyper
