#pragma once

#include <functional>

#include "qhyper/hyperalg.hpp"

namespace qhyper {

// Shape of a hyper-Pfaffian algebra: m axis groups of block size k, indices
// running in [1, k*n] per group; generator arity is m*k.
struct PfShape {
    int k = 1;
    int m = 1;
    int n = 1;

    int range() const { return k * n; }
    friend bool operator==(const PfShape&, const PfShape&) = default;
};

using Block = std::vector<int>;            // sorted k-subset
using BlockIndex = std::vector<Block>;     // one block per axis group

// Generator family b_{I_1,...,I_m} of one Pfaffian tensor component.
struct PfAlgebra {
    PfShape shape;
    int component = 0;
    char name = 'b';

    GenId gen(const BlockIndex& I) const;
    // Every sorted-block generator, in deterministic order.
    std::vector<GenId> sorted_block_generators() const;
};

// Ordered partitions of the sorted set S into blocks of size k; when
// minima_increasing is set, block minima increase left to right.
void for_each_arrangement(const std::vector<int>& S, int k, bool minima_increasing,
                          const std::function<void(const BlockIndex&)>& fn);

// Inversions of the flattened block sequence.
long arrangement_inversions(const BlockIndex& blocks);

// Quadratic exchange relations: one per tuple K of 2k-subsets, relating the
// two products over the componentwise splittings with min(I_1) first.
std::vector<NCPoly> hypf_relations(const PfAlgebra& alg);

// Block-sorted arrangement sum with increasing block minima on the first
// axis group; polynomial coefficients.
NCPoly pf_prime(const PfAlgebra& alg);
NCPoly pf_prime_on(const PfAlgebra& alg, const std::vector<std::vector<int>>& active);

// Expansion by the block containing the smallest active first-group index,
// with rank-based exponents; equals pf_prime on the validation shapes.
NCPoly pf_recursive(const PfAlgebra& alg);
NCPoly pf_recursive_on(const PfAlgebra& alg, const std::vector<std::vector<int>>& active);

// Full arrangement sum divided by [n]_{q^{k^2}}!.
NCPoly pf_full(const PfAlgebra& alg);
NCPoly pf_full_on(const PfAlgebra& alg, const std::vector<std::vector<int>>& active);

// Outer Pfaffian with arbitrary entry polynomials (normalized like pf_full).
NCPoly pf_entries(const PfShape& shape,
                  const std::function<NCPoly(const BlockIndex&)>& entry);
NCPoly pf_entries_on(const PfShape& shape, const std::vector<std::vector<int>>& active,
                     const std::function<NCPoly(const BlockIndex&)>& entry);

// Pf - c * sum_I (-q)^{inv(I, I^c)} Pf_I Pf_{I^c} over per-axis tk-subsets;
// inverse_constant picks c = 1/[n choose t]_{q^{k^2}} instead of the
// binomial itself.
NCPoly pf_laplace_poly(const PfAlgebra& alg, int t, bool inverse_constant);

// Composition: outer Pf over block hypermatrix of inner Pfaffians minus the
// scalar multiple of the base Pfaffian; k = p * kprime.
NCPoly pf_compose_poly(int kprime, int p, int m, int n, int component = 0);

// Pfaffian-determinant bridge entries: c_I = sum_J b_J xi(J, I_1, ..., I_{m-1}).
std::map<BlockIndex, NCPoly> bridge_c_entries(const HyperAlgebra& A, const PfAlgebra& B);
// Pf^{[k,m-1]}(C) - Det(A) Pf^{[k,1]}(B).
NCPoly pf_det_bridge_poly(const HyperAlgebra& A, const PfAlgebra& B);

// b_{2i-1,2i} = 1, all other entries 0; defined on the sorted-block
// generators of the [2,1,n] shape.
std::map<GenId, Rat> canonical_symplectic_b(int n, int component = 0);

// Det(A) - Pf^{[2,m-1]}(C) with the canonical symplectic substitution.
NCPoly det_as_pf_corollary_poly(const HyperAlgebra& A);

// Det(A) - const * Pf^{[k,m]} of the k-minor hypermatrix b_J = xi(J_1..J_m).
// The stated scalar reads ([n]_{q^2}!)^{n-1}([k]_q!)^n[n]_{q^{k^2}}! /
// (([n]_q!)^{n-1}[kn]_q!); re-deriving the substitution through the
// composition identity instead gives ([k]_{q^2}!)^n[n]_{q^{k^2}}!/[kn]_{q^2}!.
// Both coincide at n = 1; the checker resolves which one holds.
NCPoly det_as_pf_constant_poly(int k, int m, int n, bool rederived_constant, int component = 0);

} // namespace qhyper
