#include "qhyper/pfaffian.hpp"

#include <algorithm>
#include <numeric>

#include "qhyper/qseries.hpp"

namespace qhyper {

namespace {

std::vector<int> flatten(const BlockIndex& I) {
    std::vector<int> out;
    for (auto& b : I) out.insert(out.end(), b.begin(), b.end());
    return out;
}

void check_block_index(const PfShape& s, const BlockIndex& I) {
    if (static_cast<int>(I.size()) != s.m) throw domain_error("PfAlgebra: block count mismatch");
    for (auto& b : I) {
        if (static_cast<int>(b.size()) != s.k) throw domain_error("PfAlgebra: block size mismatch");
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 1 || b[i] > s.range()) throw domain_error("PfAlgebra: index out of range");
            if (i > 0 && b[i - 1] >= b[i]) throw domain_error("PfAlgebra: blocks must strictly increase");
        }
    }
}

// All sorted k-subsets of the sorted set S (by positions).
std::vector<Block> blocks_of(const std::vector<int>& S, int k) {
    std::vector<Block> out;
    for (auto& pos : all_subsets(static_cast<int>(S.size()), k)) {
        Block b;
        for (int p : pos) b.push_back(S[static_cast<size_t>(p - 1)]);
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<int> remove_from(const std::vector<int>& S, const Block& b) {
    std::vector<int> out;
    for (int v : S)
        if (!std::binary_search(b.begin(), b.end(), v)) out.push_back(v);
    return out;
}

} // namespace

GenId PfAlgebra::gen(const BlockIndex& I) const {
    check_block_index(shape, I);
    return GenId{component, name, flatten(I)};
}

std::vector<GenId> PfAlgebra::sorted_block_generators() const {
    std::vector<GenId> out;
    std::vector<std::vector<Block>> options(static_cast<size_t>(shape.m));
    std::vector<int> full(static_cast<size_t>(shape.range()));
    std::iota(full.begin(), full.end(), 1);
    auto bs = blocks_of(full, shape.k);
    std::function<void(size_t, BlockIndex&)> rec = [&](size_t t, BlockIndex& cur) {
        if (t == static_cast<size_t>(shape.m)) {
            out.push_back(gen(cur));
            return;
        }
        for (auto& b : bs) {
            cur.push_back(b);
            rec(t + 1, cur);
            cur.pop_back();
        }
    };
    BlockIndex cur;
    rec(0, cur);
    return out;
}

void for_each_arrangement(const std::vector<int>& S, int k, bool minima_increasing,
                          const std::function<void(const BlockIndex&)>& fn) {
    if (S.size() % static_cast<size_t>(k) != 0)
        throw domain_error("for_each_arrangement: set size not divisible by block size");
    BlockIndex cur;
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& rest) {
        if (rest.empty()) {
            fn(cur);
            return;
        }
        if (minima_increasing) {
            // First block holds the smallest remaining value.
            std::vector<int> tail(rest.begin() + 1, rest.end());
            for (auto& extra : blocks_of(tail, k - 1)) {
                Block b{rest[0]};
                b.insert(b.end(), extra.begin(), extra.end());
                cur.push_back(b);
                rec(remove_from(rest, b));
                cur.pop_back();
            }
        } else {
            for (auto& b : blocks_of(rest, k)) {
                cur.push_back(b);
                rec(remove_from(rest, b));
                cur.pop_back();
            }
        }
    };
    rec(S);
}

long arrangement_inversions(const BlockIndex& blocks) {
    std::vector<int> seq = flatten(blocks);
    long c = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++c;
    return c;
}

std::vector<NCPoly> hypf_relations(const PfAlgebra& alg) {
    const PfShape& s = alg.shape;
    if (s.range() < 2 * s.k) throw domain_error("hypf_relations: need kn >= 2k");
    std::vector<int> full(static_cast<size_t>(s.range()));
    std::iota(full.begin(), full.end(), 1);
    auto Ks = all_subsets(s.range(), 2 * s.k);

    std::vector<NCPoly> rels;
    std::vector<std::vector<int>> Kt(static_cast<size_t>(s.m));
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == static_cast<size_t>(s.m)) {
            // Splittings I | J of K with min(I_1) < min(J_1).
            NCPoly lhs, rhs;
            BlockIndex I(static_cast<size_t>(s.m)), J(static_cast<size_t>(s.m));
            std::function<void(size_t)> split = [&](size_t u) {
                if (u == static_cast<size_t>(s.m)) {
                    lhs += (NCPoly::gen(alg.gen(I)) * NCPoly::gen(alg.gen(J)))
                               .scaled(RationalFn::neg_q_power(inv_blocks(I, J)));
                    rhs += (NCPoly::gen(alg.gen(J)) * NCPoly::gen(alg.gen(I)))
                               .scaled(RationalFn::neg_q_power(inv_blocks(J, I)));
                    return;
                }
                for (auto& b : blocks_of(Kt[u], s.k)) {
                    if (u == 0 && b[0] != Kt[0][0]) continue;  // min(I_1) first
                    I[u] = b;
                    J[u] = remove_from(Kt[u], b);
                    split(u + 1);
                }
            };
            split(0);
            rels.push_back(lhs.scaled(RationalFn::q_power(static_cast<long>(s.k) * s.k)) - rhs);
            return;
        }
        for (auto& K : Ks) {
            Kt[t] = K;
            rec(t + 1);
        }
    };
    rec(0);
    std::vector<NCPoly> out;
    for (auto& r : rels)
        if (!r.is_zero()) out.push_back(r.monic());
    return out;
}

namespace {

std::vector<std::vector<int>> full_active(const PfShape& s) {
    std::vector<int> full(static_cast<size_t>(s.range()));
    std::iota(full.begin(), full.end(), 1);
    return std::vector<std::vector<int>>(static_cast<size_t>(s.m), full);
}

void check_active(const PfShape& s, const std::vector<std::vector<int>>& active, int* blocks_out) {
    if (static_cast<int>(active.size()) != s.m) throw domain_error("pf: active set count mismatch");
    size_t size = active[0].size();
    for (auto& a : active) {
        if (a.size() != size) throw domain_error("pf: active sets must share size");
        if (size % static_cast<size_t>(s.k) != 0)
            throw domain_error("pf: active size not divisible by block size");
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i - 1] >= a[i]) throw domain_error("pf: active sets must strictly increase");
    }
    *blocks_out = static_cast<int>(size) / s.k;
}

// Sum over m-tuples of block-sorted arrangements of the active sets; the
// first group optionally carries the increasing-minima constraint.
NCPoly arrangement_sum(const PfShape& shape, const std::vector<std::vector<int>>& active,
                       bool first_minima_increasing,
                       const std::function<NCPoly(const BlockIndex&)>& entry) {
    int nblocks = 0;
    check_active(shape, active, &nblocks);
    if (nblocks == 0) return NCPoly::one();
    NCPoly acc;
    std::vector<BlockIndex> arrangement(static_cast<size_t>(shape.m));
    std::function<void(size_t, long)> rec = [&](size_t t, long ell) {
        if (t == static_cast<size_t>(shape.m)) {
            NCPoly term = NCPoly::scalar(RationalFn::neg_q_power(ell));
            for (int i = 0; i < nblocks; ++i) {
                BlockIndex I;
                for (auto& arr : arrangement) I.push_back(arr[static_cast<size_t>(i)]);
                term *= entry(I);
            }
            acc += term;
            return;
        }
        for_each_arrangement(active[t], shape.k, t == 0 && first_minima_increasing,
                             [&](const BlockIndex& arr) {
                                 arrangement[t] = arr;
                                 rec(t + 1, ell + arrangement_inversions(arr));
                             });
    };
    rec(0, 0);
    return acc;
}

} // namespace

NCPoly pf_prime_on(const PfAlgebra& alg, const std::vector<std::vector<int>>& active) {
    return arrangement_sum(alg.shape, active, true,
                           [&](const BlockIndex& I) { return NCPoly::gen(alg.gen(I)); });
}

NCPoly pf_prime(const PfAlgebra& alg) { return pf_prime_on(alg, full_active(alg.shape)); }

NCPoly pf_full_on(const PfAlgebra& alg, const std::vector<std::vector<int>>& active) {
    return pf_entries_on(alg.shape, active,
                         [&](const BlockIndex& I) { return NCPoly::gen(alg.gen(I)); });
}

NCPoly pf_full(const PfAlgebra& alg) { return pf_full_on(alg, full_active(alg.shape)); }

NCPoly pf_entries_on(const PfShape& shape, const std::vector<std::vector<int>>& active,
                     const std::function<NCPoly(const BlockIndex&)>& entry) {
    int nblocks = 0;
    check_active(shape, active, &nblocks);
    NCPoly sum = arrangement_sum(shape, active, false, entry);
    return sum.scaled(RationalFn(LaurentV(1), qfact(nblocks, static_cast<long>(shape.k) * shape.k)));
}

NCPoly pf_entries(const PfShape& shape, const std::function<NCPoly(const BlockIndex&)>& entry) {
    return pf_entries_on(shape, full_active(shape), entry);
}

NCPoly pf_recursive_on(const PfAlgebra& alg, const std::vector<std::vector<int>>& active) {
    const PfShape& s = alg.shape;
    int nblocks = 0;
    check_active(s, active, &nblocks);
    if (nblocks == 0) return NCPoly::one();
    long base = static_cast<long>(s.k) * (s.k + 1) * s.m / 2;
    NCPoly acc;
    BlockIndex I(static_cast<size_t>(s.m));
    // Rank of an index within its active set, 1-based.
    auto rank_sum = [&](const Block& b, const std::vector<int>& act) {
        long sum = 0;
        for (int v : b) {
            auto it = std::lower_bound(act.begin(), act.end(), v);
            sum += static_cast<long>(it - act.begin()) + 1;
        }
        return sum;
    };
    std::function<void(size_t, long)> rec = [&](size_t t, long expo) {
        if (t == static_cast<size_t>(s.m)) {
            std::vector<std::vector<int>> rest;
            for (size_t u = 0; u < active.size(); ++u) rest.push_back(remove_from(active[u], I[u]));
            acc += (NCPoly::gen(alg.gen(I)) * pf_recursive_on(alg, rest))
                       .scaled(RationalFn::neg_q_power(expo - base));
            return;
        }
        for (auto& b : blocks_of(active[t], s.k)) {
            if (t == 0 && b[0] != active[0][0]) continue;  // block holding the smallest index
            I[t] = b;
            rec(t + 1, expo + rank_sum(b, active[t]));
        }
    };
    rec(0, 0);
    return acc;
}

NCPoly pf_recursive(const PfAlgebra& alg) { return pf_recursive_on(alg, full_active(alg.shape)); }

NCPoly pf_laplace_poly(const PfAlgebra& alg, int t, bool inverse_constant) {
    const PfShape& s = alg.shape;
    if (t < 0 || t > s.n) throw domain_error("pf_laplace_poly: requires 0 <= t <= n");
    RationalFn c = qbinom(s.n, t, static_cast<long>(s.k) * s.k);
    if (inverse_constant) c = c.inverse();
    auto subsets = all_subsets(s.range(), t * s.k);
    NCPoly sum;
    std::vector<std::vector<int>> I(static_cast<size_t>(s.m)), Ic(static_cast<size_t>(s.m));
    std::function<void(size_t)> rec = [&](size_t u) {
        if (u == static_cast<size_t>(s.m)) {
            long inv = inv_blocks(I, Ic);
            sum += (pf_full_on(alg, I) * pf_full_on(alg, Ic)).scaled(RationalFn::neg_q_power(inv));
            return;
        }
        for (auto& S : subsets) {
            I[u] = S;
            Ic[u] = complement_subset(S, s.range());
            rec(u + 1);
        }
    };
    rec(0);
    return pf_full(alg) - sum.scaled(c);
}

NCPoly pf_compose_poly(int kprime, int p, int m, int n, int component) {
    if (kprime < 1 || p < 1) throw domain_error("pf_compose_poly: bad block factorization");
    int k = kprime * p;
    PfAlgebra base{PfShape{kprime, m, p * n}, component, 'b'};
    PfShape outer{k, m, n};
    NCPoly lhs = pf_entries(outer, [&](const BlockIndex& J) {
        std::vector<std::vector<int>> active(J.begin(), J.end());
        return pf_full_on(base, active);
    });
    long kp2 = static_cast<long>(kprime) * kprime;
    RationalFn scalar(qfact(static_cast<long>(p) * n, kp2), qfact(p, kp2));
    for (int i = 1; i < n; ++i) scalar = scalar * RationalFn(LaurentV(1), qfact(p, kp2));
    scalar = scalar * RationalFn(LaurentV(1), qfact(n, static_cast<long>(k) * k));
    return lhs - pf_full(base).scaled(scalar);
}

std::map<BlockIndex, NCPoly> bridge_c_entries(const HyperAlgebra& A, const PfAlgebra& B) {
    const PfShape& bs = B.shape;
    if (bs.m != 1) throw domain_error("bridge_c_entries: B must have one axis group");
    int m = A.shape.axes();
    if (!A.shape.is_cubical() || A.shape.dim(1) != bs.range())
        throw domain_error("bridge_c_entries: A axis size must equal the b index range");
    PfShape cshape{bs.k, m - 1, bs.n};
    std::map<BlockIndex, NCPoly> out;
    auto Js = all_subsets(bs.range(), bs.k);
    std::vector<Block> blocks;
    std::function<void(size_t, BlockIndex&)> rec = [&](size_t t, BlockIndex& cur) {
        if (t == static_cast<size_t>(cshape.m)) {
            NCPoly c;
            for (auto& J : Js) {
                std::vector<std::vector<int>> sets{J};
                for (auto& b : cur) sets.push_back(b);
                c += NCPoly::gen(B.gen({J})) * minor_xi(A, sets);
            }
            out.emplace(cur, std::move(c));
            return;
        }
        for (auto& Jb : Js) {
            cur.push_back(Jb);
            rec(t + 1, cur);
            cur.pop_back();
        }
    };
    BlockIndex cur;
    rec(0, cur);
    return out;
}

NCPoly pf_det_bridge_poly(const HyperAlgebra& A, const PfAlgebra& B) {
    auto entries = bridge_c_entries(A, B);
    PfShape cshape{B.shape.k, A.shape.axes() - 1, B.shape.n};
    NCPoly lhs = pf_entries(cshape, [&](const BlockIndex& I) { return entries.at(I); });
    return lhs - hyperdet_fixed(A, 1) * pf_full(B);
}

std::map<GenId, Rat> canonical_symplectic_b(int n, int component) {
    PfAlgebra B{PfShape{2, 1, n}, component, 'b'};
    std::map<GenId, Rat> out;
    for (auto& g : B.sorted_block_generators()) out[g] = Rat(0);
    for (int i = 1; i <= n; ++i) out[B.gen({{2 * i - 1, 2 * i}})] = Rat(1);
    return out;
}

NCPoly det_as_pf_corollary_poly(const HyperAlgebra& A) {
    int m = A.shape.axes();
    if (!A.shape.is_cubical() || A.shape.dim(1) % 2 != 0)
        throw domain_error("det_as_pf_corollary_poly: even cubical axis size required");
    int n = A.shape.dim(1) / 2;
    PfShape cshape{2, m - 1, n};
    NCPoly lhs = pf_entries(cshape, [&](const BlockIndex& I) {
        NCPoly c;
        for (int i = 1; i <= n; ++i) {
            std::vector<std::vector<int>> sets{{2 * i - 1, 2 * i}};
            for (auto& b : I) sets.push_back(b);
            c += minor_xi(A, sets);
        }
        return c;
    });
    return hyperdet_fixed(A, 1) - lhs;
}

NCPoly det_as_pf_constant_poly(int k, int m, int n, bool rederived_constant, int component) {
    HyperAlgebra A{HyperShape::cubical(k * n, m), component, 'a'};
    PfShape shape{k, m, n};
    NCPoly pf = pf_entries(shape, [&](const BlockIndex& J) {
        std::vector<std::vector<int>> sets(J.begin(), J.end());
        return minor_xi(A, sets);
    });
    RationalFn c(1);
    if (rederived_constant) {
        // ([k]_{q^2}!)^n [n]_{q^{k^2}}! / [kn]_{q^2}!
        for (int i = 0; i < n; ++i) c = c * RationalFn(qfact(k, 2));
        c = c * RationalFn(qfact(n, static_cast<long>(k) * k), qfact(static_cast<long>(k) * n, 2));
    } else {
        // ([n]_{q^2}!)^{n-1} ([k]_q!)^n [n]_{q^{k^2}}! / (([n]_q!)^{n-1} [kn]_q!)
        for (int i = 1; i < n; ++i) c = c * RationalFn(qfact(n, 2), qfact(n, 1));
        for (int i = 0; i < n; ++i) c = c * RationalFn(qfact(k, 1));
        c = c * RationalFn(qfact(n, static_cast<long>(k) * k), qfact(static_cast<long>(k) * n, 1));
    }
    return hyperdet_fixed(A, 1) - pf.scaled(c);
}

} // namespace qhyper
