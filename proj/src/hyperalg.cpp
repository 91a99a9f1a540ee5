#include "qhyper/hyperalg.hpp"

#include "qhyper/extalg.hpp"

#include <algorithm>
#include <set>

#include "qhyper/qseries.hpp"

namespace qhyper {

namespace {

// Odometer over `count` independent permutations of S_n.
void for_each_perm_tuple(int n, int count, const std::function<void(const std::vector<Perm>&)>& fn) {
    auto perms = all_perms(n);
    std::vector<size_t> odo(static_cast<size_t>(count), 0);
    std::vector<Perm> tuple(static_cast<size_t>(count), Perm::identity(n));
    for (;;) {
        for (size_t t = 0; t < odo.size(); ++t) tuple[t] = perms[odo[t]];
        fn(tuple);
        size_t t = 0;
        while (t < odo.size()) {
            if (++odo[t] < perms.size()) break;
            odo[t] = 0;
            ++t;
        }
        if (t == odo.size()) break;
        if (odo.empty()) break;
    }
}

// Cartesian product of per-position choices.
template <class T>
void for_each_choice(const std::vector<std::vector<T>>& options,
                     const std::function<void(const std::vector<T>&)>& fn) {
    std::vector<size_t> odo(options.size(), 0);
    std::vector<T> cur(options.size());
    for (auto& o : options)
        if (o.empty()) return;
    for (;;) {
        for (size_t t = 0; t < odo.size(); ++t) cur[t] = options[t][odo[t]];
        fn(cur);
        size_t t = 0;
        while (t < odo.size()) {
            if (++odo[t] < options[t].size()) break;
            odo[t] = 0;
            ++t;
        }
        if (t == odo.size()) break;
        if (odo.empty()) break;
    }
}

std::vector<NCPoly> dedup_relations(std::vector<NCPoly> rels) {
    std::set<std::map<Word, RationalFn>> seen;
    std::vector<NCPoly> out;
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        NCPoly m = r.monic();
        if (seen.insert(m.terms()).second) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(),
              [](const NCPoly& a, const NCPoly& b) { return a.terms() < b.terms(); });
    return out;
}

// Realigned generator a^{(k)}_{i, alpha}.
NCPoly realigned_gen(const HyperAlgebra& alg, int axis, int row, const std::vector<int>& alpha) {
    return NCPoly::gen(alg.gen(realign_index_inverse(alg.shape, axis, row, alpha)));
}

// sum over componentwise splittings alpha | beta of J of
// (-q)^{inv(alpha,beta)} a^{(k)}_{r1,alpha} a^{(k)}_{r2,beta}.
NCPoly splitting_sum(const HyperAlgebra& alg, int axis, int r1, int r2,
                     const std::vector<std::vector<int>>& J) {
    size_t m1 = J.size();
    NCPoly acc;
    std::vector<int> pick(m1, 0);
    for (;;) {
        std::vector<int> alpha(m1), beta(m1);
        for (size_t t = 0; t < m1; ++t) {
            alpha[t] = J[t][static_cast<size_t>(pick[t])];
            beta[t] = J[t][static_cast<size_t>(1 - pick[t])];
        }
        NCPoly term = realigned_gen(alg, axis, r1, alpha) * realigned_gen(alg, axis, r2, beta);
        acc += term.scaled(RationalFn::neg_q_power(inv_pair(alpha, beta)));
        size_t t = 0;
        while (t < m1) {
            if (++pick[t] < 2) break;
            pick[t] = 0;
            ++t;
        }
        if (t == m1) break;
        if (m1 == 0) break;
    }
    return acc;
}

// All tuples of 2-element subsets of the axis ranges omitting `axis`.
std::vector<std::vector<std::vector<int>>> all_J_tuples(const HyperShape& shape, int axis) {
    std::vector<std::vector<std::vector<int>>> options;
    for (int t = 1; t <= shape.axes(); ++t) {
        if (t == axis) continue;
        options.push_back(all_subsets(shape.dim(t), 2));
    }
    std::vector<std::vector<std::vector<int>>> out;
    if (options.empty()) return out;
    for_each_choice<std::vector<int>>(options, [&](const std::vector<std::vector<int>>& J) {
        out.push_back(J);
    });
    return out;
}

} // namespace

std::vector<NCPoly> hyper_relations_axis(const HyperAlgebra& alg, int axis) {
    const HyperShape& shape = alg.shape;
    std::vector<NCPoly> rels;
    if (shape.axes() == 1) return rels;
    RationalFn q = RationalFn::q_power(1);
    int n = shape.dim(axis);
    for (auto& J : all_J_tuples(shape, axis)) {
        for (int i = 1; i <= n; ++i) rels.push_back(splitting_sum(alg, axis, i, i, J));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                rels.push_back(splitting_sum(alg, axis, j, i, J) +
                               q * splitting_sum(alg, axis, i, j, J));
    }
    return dedup_relations(std::move(rels));
}

std::vector<NCPoly> hyper_relations(const HyperAlgebra& alg) {
    std::vector<NCPoly> rels;
    for (int k = 1; k <= alg.shape.axes(); ++k) {
        auto axis_rels = hyper_relations_axis(alg, k);
        rels.insert(rels.end(), axis_rels.begin(), axis_rels.end());
    }
    return dedup_relations(std::move(rels));
}

std::vector<NCPoly> derived_relations_rea3(const HyperAlgebra& alg) {
    const HyperShape& shape = alg.shape;
    int m = shape.axes();
    std::vector<NCPoly> out;
    if (m == 1) return out;
    if (!shape.is_cubical()) throw domain_error("derived_relations_rea3: cubical shape required");
    int n = shape.dim(1);
    // J applies positionally to whichever axes remain.
    std::vector<std::vector<std::vector<int>>> options(static_cast<size_t>(m - 1),
                                                       all_subsets(n, 2));
    std::vector<std::vector<std::vector<int>>> Js;
    for_each_choice<std::vector<int>>(options,
                                      [&](const std::vector<std::vector<int>>& J) { Js.push_back(J); });
    for (auto& J : Js) {
        for (int s = 1; s <= m; ++s)
            for (int t = s; t <= m; ++t)
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        for (int k = 1; k <= n; ++k)
                            for (int l = k + 1; l <= n; ++l) {
                                if (s == t && i == k && j == l) continue;
                                if (s == t && std::make_pair(i, j) > std::make_pair(k, l)) continue;
                                out.push_back(splitting_sum(alg, s, i, j, J) -
                                              splitting_sum(alg, t, k, l, J));
                            }
    }
    return dedup_relations(std::move(out));
}

std::vector<NCPoly> wedge_relation_instances(const HyperAlgebra& alg, int axis) {
    std::vector<NCPoly> out;
    if (alg.shape.axes() == 1) return out;
    auto omegas = omega_vector(alg, axis);
    RationalFn q = RationalFn::q_power(1);
    int n = alg.shape.dim(axis);
    auto harvest = [&](const ExtElem& e) {
        for (auto& [mono, coeff] : e.terms()) out.push_back(coeff);
    };
    for (int i = 0; i < n; ++i) harvest(wedge(omegas[static_cast<size_t>(i)], omegas[static_cast<size_t>(i)]));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            harvest(wedge(omegas[static_cast<size_t>(j)], omegas[static_cast<size_t>(i)]) +
                    wedge(omegas[static_cast<size_t>(i)], omegas[static_cast<size_t>(j)]).scaled(q));
    return dedup_relations(std::move(out));
}

NCPoly hyperdet_fixed_entries(const HyperShape& shape, int axis,
                              const std::function<NCPoly(const std::vector<int>&)>& entry) {
    if (!shape.is_cubical()) throw domain_error("hyperdet_fixed: cubical shape required");
    int m = shape.axes();
    if (axis < 1 || axis > m) throw domain_error("hyperdet_fixed: axis out of range");
    int n = shape.dim(1);
    NCPoly det;
    for_each_perm_tuple(n, m - 1, [&](const std::vector<Perm>& sigmas) {
        long ell = 0;
        for (auto& s : sigmas) ell += inversions(s);
        NCPoly term = NCPoly::scalar(RationalFn::neg_q_power(ell));
        for (int j = 1; j <= n; ++j) {
            std::vector<int> ix(static_cast<size_t>(m));
            size_t t = 0;
            for (int ax = 1; ax <= m; ++ax) {
                if (ax == axis) {
                    ix[static_cast<size_t>(ax - 1)] = j;
                } else {
                    ix[static_cast<size_t>(ax - 1)] = sigmas[t](j);
                    ++t;
                }
            }
            term *= entry(ix);
        }
        det += term;
    });
    return det;
}

NCPoly hyperdet_fixed(const HyperAlgebra& alg, int axis) {
    return hyperdet_fixed_entries(alg.shape, axis,
                                  [&](const std::vector<int>& ix) { return NCPoly::gen(alg.gen(ix)); });
}

NCPoly hyperdet_normalized(const HyperAlgebra& alg) {
    const HyperShape& shape = alg.shape;
    if (!shape.is_cubical()) throw domain_error("hyperdet_normalized: cubical shape required");
    int m = shape.axes();
    int n = shape.dim(1);
    NCPoly det;
    for_each_perm_tuple(n, m, [&](const std::vector<Perm>& sigmas) {
        long ell = 0;
        for (auto& s : sigmas) ell += inversions(s);
        std::vector<GenId> ls;
        for (int i = 1; i <= n; ++i) {
            std::vector<int> ix(static_cast<size_t>(m));
            for (int t = 0; t < m; ++t) ix[static_cast<size_t>(t)] = sigmas[static_cast<size_t>(t)](i);
            ls.push_back(alg.gen(ix));
        }
        det.add_term(Word{std::move(ls)}, RationalFn::neg_q_power(ell));
    });
    return det.scaled(RationalFn(LaurentV(1), qfact(n, 2)));
}

// ---- classical ---------------------------------------------------------------

Rat HyperValues::at(const std::vector<int>& ix) const {
    auto it = vals.find(ix);
    return it == vals.end() ? Rat(0) : it->second;
}

Rat cayley_classical(const HyperValues& A) {
    int m = A.shape.axes();
    if (m % 2 != 0) throw domain_error("cayley_classical: even axis count required");
    if (!A.shape.is_cubical()) throw domain_error("cayley_classical: cubical shape required");
    int n = A.shape.dim(1);
    Rat acc(0);
    for_each_perm_tuple(n, m, [&](const std::vector<Perm>& sigmas) {
        long ell = 0;
        for (auto& s : sigmas) ell += inversions(s);
        Rat prod = (ell % 2 == 0) ? Rat(1) : Rat(-1);
        for (int i = 1; i <= n && prod != 0; ++i) {
            std::vector<int> ix(static_cast<size_t>(m));
            for (int t = 0; t < m; ++t) ix[static_cast<size_t>(t)] = sigmas[static_cast<size_t>(t)](i);
            prod *= A.at(ix);
        }
        acc += prod;
    });
    Rat fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    return acc / fact;
}

Rat det_numeric(const std::vector<std::vector<Rat>>& B) {
    int n = static_cast<int>(B.size());
    Rat acc(0);
    for (auto& s : all_perms(n)) {
        Rat prod = (inversions(s) % 2 == 0) ? Rat(1) : Rat(-1);
        for (int i = 1; i <= n; ++i)
            prod *= B[static_cast<size_t>(i - 1)][static_cast<size_t>(s(i) - 1)];
        acc += prod;
    }
    return acc;
}

HyperValues circ_numeric(const std::vector<std::vector<Rat>>& B, const HyperValues& A, int axis) {
    int nk = A.shape.dim(axis);
    if (static_cast<int>(B.size()) != nk) throw domain_error("circ_numeric: dimension mismatch");
    HyperValues out{A.shape, {}};
    for (auto& ix : all_indices(A.shape)) {
        Rat acc(0);
        for (int j = 1; j <= nk; ++j) {
            std::vector<int> src = ix;
            src[static_cast<size_t>(axis - 1)] = j;
            acc += B[static_cast<size_t>(ix[static_cast<size_t>(axis - 1)] - 1)][static_cast<size_t>(j - 1)] *
                   A.at(src);
        }
        if (acc != 0) out.vals[ix] = acc;
    }
    return out;
}

HyperValues contract_product(const HyperValues& A, int axisA, const HyperValues& B, int axisB) {
    if (A.shape.dim(axisA) != B.shape.dim(axisB))
        throw domain_error("contract_product: contracted dimensions differ");
    std::vector<int> dims;
    for (int t = 1; t <= A.shape.axes(); ++t)
        if (t != axisA) dims.push_back(A.shape.dim(t));
    for (int t = 1; t <= B.shape.axes(); ++t)
        if (t != axisB) dims.push_back(B.shape.dim(t));
    HyperValues out{HyperShape(dims), {}};
    int na = A.shape.axes() - 1;
    for (auto& ix : all_indices(out.shape)) {
        std::vector<int> ia(ix.begin(), ix.begin() + na);
        std::vector<int> ib(ix.begin() + na, ix.end());
        Rat acc(0);
        for (int j = 1; j <= A.shape.dim(axisA); ++j) {
            acc += A.at(realign_index_inverse(A.shape, axisA, j, ia)) *
                   B.at(realign_index_inverse(B.shape, axisB, j, ib));
        }
        if (acc != 0) out.vals[ix] = acc;
    }
    return out;
}

// ---- minors and expansions ---------------------------------------------------

NCPoly minor_xi(const HyperAlgebra& alg, const std::vector<std::vector<int>>& sets) {
    const HyperShape& shape = alg.shape;
    int m = shape.axes();
    if (static_cast<int>(sets.size()) != m) throw domain_error("minor_xi: one subset per axis");
    size_t r = sets[0].size();
    for (int t = 0; t < m; ++t) {
        if (sets[static_cast<size_t>(t)].size() != r) throw domain_error("minor_xi: subsets must share size");
        for (size_t i = 0; i < r; ++i) {
            int v = sets[static_cast<size_t>(t)][i];
            if (v < 1 || v > shape.dim(t + 1)) throw domain_error("minor_xi: subset out of range");
            if (i > 0 && sets[static_cast<size_t>(t)][i - 1] >= v)
                throw domain_error("minor_xi: subsets must strictly increase");
        }
    }
    NCPoly xi;
    for_each_perm_tuple(static_cast<int>(r), m - 1, [&](const std::vector<Perm>& sigmas) {
        long ell = 0;
        for (auto& s : sigmas) ell += inversions(s);
        std::vector<GenId> ls;
        for (size_t i = 1; i <= r; ++i) {
            std::vector<int> ix(static_cast<size_t>(m));
            ix[0] = sets[0][i - 1];
            for (int t = 1; t < m; ++t)
                ix[static_cast<size_t>(t)] =
                    sets[static_cast<size_t>(t)][static_cast<size_t>(sigmas[static_cast<size_t>(t - 1)](static_cast<int>(i)) - 1)];
            ls.push_back(alg.gen(ix));
        }
        xi.add_term(Word{std::move(ls)}, RationalFn::neg_q_power(ell));
    });
    return xi;
}

NCPoly laplace_row_poly(const HyperAlgebra& alg, const std::vector<int>& rows) {
    const HyperShape& shape = alg.shape;
    if (!shape.is_cubical()) throw domain_error("laplace_row_poly: cubical shape required");
    int m = shape.axes();
    int n = shape.dim(1);
    if (static_cast<int>(rows.size()) != n) throw domain_error("laplace_row_poly: need n row indices");
    NCPoly lhs;
    for_each_perm_tuple(n, m - 1, [&](const std::vector<Perm>& sigmas) {
        long ell = 0;
        for (auto& s : sigmas) ell += inversions(s);
        std::vector<GenId> ls;
        for (int i = 1; i <= n; ++i) {
            std::vector<int> ix(static_cast<size_t>(m));
            ix[0] = rows[static_cast<size_t>(i - 1)];
            for (int t = 1; t < m; ++t) ix[static_cast<size_t>(t)] = sigmas[static_cast<size_t>(t - 1)](i);
            ls.push_back(alg.gen(ix));
        }
        lhs.add_term(Word{std::move(ls)}, RationalFn::neg_q_power(ell));
    });
    std::set<int> distinct(rows.begin(), rows.end());
    if (distinct.size() < rows.size()) return lhs;
    Perm pi{rows};
    return lhs - hyperdet_fixed(alg, 1).scaled(RationalFn::neg_q_power(inversions(pi)));
}

NCPoly laplace_minor_poly(const HyperAlgebra& alg, int r, const std::vector<int>& I1) {
    const HyperShape& shape = alg.shape;
    if (!shape.is_cubical()) throw domain_error("laplace_minor_poly: cubical shape required");
    int m = shape.axes();
    int n = shape.dim(1);
    if (static_cast<int>(I1.size()) != r) throw domain_error("laplace_minor_poly: |I1| must be r");
    std::vector<std::vector<std::vector<int>>> options(static_cast<size_t>(m - 1),
                                                       all_subsets(n, r));
    NCPoly sum;
    for_each_choice<std::vector<int>>(options, [&](const std::vector<std::vector<int>>& tail) {
        long ell = -ell_subset(I1);
        std::vector<std::vector<int>> sets{I1}, csets{complement_subset(I1, n)};
        for (auto& I : tail) {
            ell += ell_subset(I);
            sets.push_back(I);
            csets.push_back(complement_subset(I, n));
        }
        sum += (minor_xi(alg, sets) * minor_xi(alg, csets)).scaled(RationalFn::neg_q_power(ell));
    });
    return hyperdet_fixed(alg, 1) - sum;
}

NCPoly pluecker_poly(const HyperAlgebra& alg, PlueckerVariant variant, int r) {
    const HyperShape& shape = alg.shape;
    if (!shape.is_cubical()) throw domain_error("pluecker_poly: cubical shape required");
    int m = shape.axes();
    int dim = shape.dim(1);
    if (dim % 2 != 0) throw domain_error("pluecker_poly: axis dimension must be even");
    int n = dim / 2;
    if (r < 1 || r >= n) throw domain_error("pluecker_poly: requires 1 <= r < n");
    std::vector<int> I, Iprime;
    for (int i = 1; i <= n; ++i) I.push_back(i);
    for (int i = n + 1; i <= 2 * n; ++i) Iprime.push_back(i);

    // K_2 ranges over n-subsets containing [1, r] (the truncated slot);
    // the remaining K_t are unconstrained.
    std::vector<std::vector<std::vector<int>>> options;
    options.push_back(all_subsets_containing_prefix(2 * n, n, r));
    for (int t = 3; t <= m; ++t) options.push_back(all_subsets(2 * n, n));

    NCPoly acc;
    for_each_choice<std::vector<int>>(options, [&](const std::vector<std::vector<int>>& Ks) {
        long ell = 0;
        std::vector<std::vector<int>> K{I}, Kc{I};
        for (auto& Kt : Ks) {
            ell += ell_subset(Kt);
            K.push_back(Kt);
            Kc.push_back(complement_subset(Kt, 2 * n));
        }
        switch (variant) {
            case PlueckerVariant::thp1_a: {
                acc += (minor_xi(alg, K) * minor_xi(alg, Kc)).scaled(RationalFn::neg_q_power(ell));
                break;
            }
            case PlueckerVariant::thp1_b: {
                acc += (minor_xi(alg, Kc) * minor_xi(alg, K)).scaled(RationalFn::neg_q_power(-ell));
                break;
            }
            case PlueckerVariant::thp3: {
                std::vector<std::vector<int>> Kp = K, Kcp = Kc;
                Kp[0] = Iprime;   // xi(I', K_2, ..., K_m)
                Kcp[0] = I;       // xi(I, K'_2, ..., K'_m)
                NCPoly lhs = (minor_xi(alg, Kp) * minor_xi(alg, Kcp))
                                 .scaled(RationalFn::neg_q_power(ell));
                long rhs_ell = static_cast<long>(m - 1) * n * n - ell;
                NCPoly rhs = (minor_xi(alg, Kcp) * minor_xi(alg, Kp))
                                 .scaled(RationalFn::neg_q_power(rhs_ell + n * n - 2L * n * r));
                acc += lhs - rhs;
                break;
            }
        }
    });
    return acc;
}

// ---- structure maps ----------------------------------------------------------

NCPoly phi_map(const NCPoly& p, const HyperAlgebra& alg, int first_component) {
    int m2 = alg.shape.axes();
    if (m2 % 2 != 0) throw domain_error("phi_map: even axis count required");
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        std::vector<GenId> ls;
        for (auto& g : w.letters) {
            if (static_cast<int>(g.index.size()) != m2)
                throw domain_error("phi_map: generator arity mismatch");
            for (int t = 0; t < m2 / 2; ++t)
                ls.push_back(GenId{first_component + t, 'a',
                                   {g.index[static_cast<size_t>(2 * t)], g.index[static_cast<size_t>(2 * t + 1)]}});
        }
        out.add_term(Word::of(std::move(ls)), c);
    }
    return out;
}

NCPoly delta_split(const NCPoly& p, const HyperAlgebra& alg, int m_left, int comp_left,
                   int comp_right) {
    const HyperShape& shape = alg.shape;
    if (!shape.is_cubical()) throw domain_error("delta_split: cubical shape required");
    int m = shape.axes();
    if (m_left < 1 || m_left >= m) throw domain_error("delta_split: bad split position");
    int n = shape.dim(1);
    HyperAlgebra A0{HyperShape::cubical(n, m_left + 1), comp_left, alg.name};
    HyperAlgebra A1{HyperShape::cubical(n, m - m_left + 1), comp_right, alg.name};
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        NCPoly image = NCPoly::scalar(c);
        for (auto& g : w.letters) {
            NCPoly sum;
            std::vector<int> left(g.index.begin(), g.index.begin() + m_left);
            std::vector<int> right(g.index.begin() + m_left, g.index.end());
            for (int j = 1; j <= n; ++j) {
                std::vector<int> li = left, ri = right;
                li.push_back(j);
                ri.insert(ri.begin(), j);
                sum += NCPoly::gen(A0.gen(li)) * NCPoly::gen(A1.gen(ri));
            }
            image *= sum;
        }
        out += image;
    }
    return out;
}

NCPoly coaction(const NCPoly& p, const HyperAlgebra& alg, int axis, Side side, int matq_component) {
    const HyperShape& shape = alg.shape;
    int n = shape.dim(axis);
    QMatrixContext B{n, matq_component, 'a'};
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        NCPoly image = NCPoly::scalar(c);
        for (auto& g : w.letters) {
            int i = g.index[static_cast<size_t>(axis - 1)];
            NCPoly sum;
            for (int j = 1; j <= n; ++j) {
                std::vector<int> ix = g.index;
                ix[static_cast<size_t>(axis - 1)] = j;
                if (side == Side::left)
                    sum += NCPoly::gen(B.gen(i, j)) * NCPoly::gen(alg.gen(ix));
                else
                    sum += NCPoly::gen(alg.gen(ix)) * NCPoly::gen(B.gen(j, i));
            }
            image *= sum;
        }
        out += image;
    }
    return out;
}

// ---- quantized enveloping algebra actions ------------------------------------

namespace {

int acted_index(const GenId& g, Side side) {
    if (g.index.empty()) throw domain_error("uq action: generator without indices");
    return side == Side::left ? g.index.back() : g.index.front();
}

// v-exponent of K^{+1/2} on one letter: +1 on index k, -1 on index k+1.
int k_half_exp(int idx, int k) { return idx == k ? 1 : (idx == k + 1 ? -1 : 0); }

} // namespace

NCPoly uq_weight_act(const WeightVector& lambda, const NCPoly& p, Side side) {
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        long vexp = 0;
        for (auto& g : w.letters) {
            int i = acted_index(g, side);
            if (i < 1 || i > lambda.size()) throw domain_error("uq_weight_act: index out of weight range");
            vexp += lambda.twice_coords[static_cast<size_t>(i - 1)];
        }
        out.add_term(w, c * RationalFn::v_power(vexp));
    }
    return out;
}

namespace {

// Shared ladder-action skeleton: raising (e) or lowering (f), either side.
NCPoly ladder_act(int k, const NCPoly& p, const HyperAlgebra& alg, Side side, bool raising) {
    int n = side == Side::left ? alg.shape.dim(alg.shape.axes()) : alg.shape.dim(1);
    if (k < 1 || k >= n) throw domain_error("uq ladder action: k out of range");
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        for (size_t pos = 0; pos < w.letters.size(); ++pos) {
            const GenId& g = w.letters[pos];
            int i = acted_index(g, side);
            // Left actions move the LAST index downward for e, upward for f;
            // right actions move the FIRST index upward for e, downward for f.
            int hit, to;
            if (side == Side::left) {
                hit = raising ? k + 1 : k;
                to = raising ? k : k + 1;
            } else {
                hit = raising ? k : k + 1;
                to = raising ? k + 1 : k;
            }
            if (i != hit) continue;
            long vexp = 0;
            for (size_t j = 0; j < pos; ++j) vexp += k_half_exp(acted_index(w.letters[j], side), k);
            for (size_t j = pos + 1; j < w.letters.size(); ++j)
                vexp -= k_half_exp(acted_index(w.letters[j], side), k);
            std::vector<GenId> ls = w.letters;
            if (side == Side::left)
                ls[pos].index.back() = to;
            else
                ls[pos].index.front() = to;
            out.add_term(Word{std::move(ls)}, c * RationalFn::v_power(vexp));
        }
    }
    return out;
}

} // namespace

NCPoly uq_e_act(int k, const NCPoly& p, const HyperAlgebra& alg, Side side) {
    return ladder_act(k, p, alg, side, true);
}

NCPoly uq_f_act(int k, const NCPoly& p, const HyperAlgebra& alg, Side side) {
    return ladder_act(k, p, alg, side, false);
}

// ---- circle products ----------------------------------------------------------

std::map<std::vector<int>, NCPoly> circ_entries_quantum(const QMatrixContext& B,
                                                        const HyperAlgebra& alg, int axis) {
    if (B.n != alg.shape.dim(axis)) throw domain_error("circ_entries_quantum: dimension mismatch");
    std::map<std::vector<int>, NCPoly> out;
    for (auto& ix : all_indices(alg.shape)) {
        NCPoly acc;
        for (int j = 1; j <= B.n; ++j) {
            std::vector<int> src = ix;
            src[static_cast<size_t>(axis - 1)] = j;
            acc += NCPoly::gen(B.gen(ix[static_cast<size_t>(axis - 1)], j)) * NCPoly::gen(alg.gen(src));
        }
        out.emplace(ix, std::move(acc));
    }
    return out;
}

} // namespace qhyper
