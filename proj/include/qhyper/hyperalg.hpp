#pragma once

#include <functional>

#include "qhyper/hypermatrix.hpp"
#include "qhyper/qmatrix.hpp"

namespace qhyper {

// ---- defining relations ------------------------------------------------------

// Quadratic relations of the quantum hypermatrix algebra: for every axis k,
// every tuple J of 2-element subsets of the remaining axis ranges, one
// relation per row i and one per row pair i < j, each a signed sum over the
// 2^{m-1} componentwise splittings of J.  Deduplicated up to scalar,
// deterministic order.  m = 1 has no J and yields no relations.
std::vector<NCPoly> hyper_relations(const HyperAlgebra& alg);

// Relations contributed by one axis, before merging across axes.
std::vector<NCPoly> hyper_relations_axis(const HyperAlgebra& alg, int axis);

// The same instances harvested from the exterior side: coefficient
// polynomials of w_i ^ w_i and of w_j ^ w_i + q w_i ^ w_j over the realigned
// row vectors of the axis.  Deduplicated monic, like hyper_relations_axis.
std::vector<NCPoly> wedge_relation_instances(const HyperAlgebra& alg, int axis);

// The subtracted two-axis combinations; each lies in the degree-2 span of
// hyper_relations at the registered sizes.
std::vector<NCPoly> derived_relations_rea3(const HyperAlgebra& alg);

// ---- hyperdeterminants -------------------------------------------------------

// Det with axis k unpermuted: sum over (m-1)-tuples of permutations.
NCPoly hyperdet_fixed(const HyperAlgebra& alg, int axis);
// Same sum with arbitrary entry polynomials in place of the generators.
NCPoly hyperdet_fixed_entries(const HyperShape& shape, int axis,
                              const std::function<NCPoly(const std::vector<int>&)>& entry);
// All m axes permuted, divided by [n]_{q^2}!.
NCPoly hyperdet_normalized(const HyperAlgebra& alg);

// ---- classical (commuting-entry) computations --------------------------------

struct HyperValues {
    HyperShape shape;
    std::map<std::vector<int>, Rat> vals;

    Rat at(const std::vector<int>& ix) const;
};

// Cayley first hyperdeterminant of an even-dimensional hypermatrix with
// commuting entries: (1/n!) sum over all 2m permutations, each contributing
// its sign.
Rat cayley_classical(const HyperValues& A);

Rat det_numeric(const std::vector<std::vector<Rat>>& B);

// (B o_k A) with numeric entries.
HyperValues circ_numeric(const std::vector<std::vector<Rat>>& B, const HyperValues& A, int axis);

// General contraction of axis axisA of A with axis axisB of B; the result
// keeps A's remaining axes then B's remaining axes.
HyperValues contract_product(const HyperValues& A, int axisA, const HyperValues& B, int axisB);

// ---- minors and expansions ---------------------------------------------------

// Quantum r-minor: per-axis sorted r-subsets, first axis in increasing order.
NCPoly minor_xi(const HyperAlgebra& alg, const std::vector<std::vector<int>>& sets);

// Row expansion minus its claimed value ((-q)^{l(pi)} Det, or 0 on repeats).
NCPoly laplace_row_poly(const HyperAlgebra& alg, const std::vector<int>& rows);

// Det minus the quadratic minor expansion over I_2, ..., I_m.
NCPoly laplace_minor_poly(const HyperAlgebra& alg, int r, const std::vector<int>& I1);

enum class PlueckerVariant { thp1_a, thp1_b, thp3 };

// Quadratic minor identities for a cubical algebra of even axis dimension 2n;
// 1 <= r < n.  Variants a and b are claimed-zero sums; thp3 returns LHS-RHS.
NCPoly pluecker_poly(const HyperAlgebra& alg, PlueckerVariant variant, int r);

// ---- structure maps ----------------------------------------------------------

// Generator-wise split of a 2m-axis generator into m quantum-matrix letters
// in components first_component, ..., first_component + m - 1.
NCPoly phi_map(const NCPoly& p, const HyperAlgebra& alg, int first_component = 0);

// Splitting homomorphism on a cubical (m+l)-axis algebra: a_{alpha beta} |->
// sum_j a_{alpha j} (x) a_{j beta}, components (comp_left: m+1 axes,
// comp_right: 1+l axes).
NCPoly delta_split(const NCPoly& p, const HyperAlgebra& alg, int m_left, int comp_left,
                   int comp_right);

enum class Side { left, right };

// Comodule structure over the quantum matrix algebra on the chosen axis:
// left: a^{(k)}_{i alpha} |-> sum_j a_{ij} (x) a^{(k)}_{j alpha};
// right: a^{(k)}_{i alpha} |-> sum_j a^{(k)}_{j alpha} (x) a_{ji}.
NCPoly coaction(const NCPoly& p, const HyperAlgebra& alg, int axis, Side side, int matq_component);

// ---- quantized enveloping algebra actions ------------------------------------

// Weights are half-integer coordinate vectors; twice_coords[i] = 2<lambda, eps_{i+1}>.
struct WeightVector {
    std::vector<int> twice_coords;
    int size() const { return static_cast<int>(twice_coords.size()); }
};

// Left actions read the LAST index of each generator, right actions the
// FIRST, extended to words through the coproduct
//   e_k |-> e_k (x) K^{-1/2} + K^{+1/2} (x) e_k,   K = q^{eps_k - eps_{k+1}},
// and likewise for f_k; weights act diagonally.
NCPoly uq_weight_act(const WeightVector& lambda, const NCPoly& p, Side side);
NCPoly uq_e_act(int k, const NCPoly& p, const HyperAlgebra& alg, Side side);
NCPoly uq_f_act(int k, const NCPoly& p, const HyperAlgebra& alg, Side side);

// ---- circle products ----------------------------------------------------------

// Entries of B o_k A with B a quantum matrix in its own component:
// (B o_k A)_I = sum_j b_{I_k, j} a_{..j..}.
std::map<std::vector<int>, NCPoly> circ_entries_quantum(const QMatrixContext& B,
                                                        const HyperAlgebra& alg, int axis);

} // namespace qhyper
