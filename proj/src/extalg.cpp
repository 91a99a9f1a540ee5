#include "qhyper/extalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qhyper {

ExtMono ExtMono::of(std::vector<std::vector<int>> s) {
    for (auto& slot : s)
        for (size_t i = 1; i < slot.size(); ++i)
            if (slot[i - 1] >= slot[i]) throw domain_error("ExtMono: slots must strictly increase");
    return ExtMono{std::move(s)};
}

ExtElem ExtElem::term(ExtMono m, NCPoly c) {
    ExtElem e(m.arity());
    e.add_term(std::move(m), c);
    return e;
}

void ExtElem::add_term(ExtMono m, const NCPoly& c) {
    if (m.arity() != arity_) throw domain_error("ExtElem: slot arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    if (arity_ != o.arity_) throw domain_error("ExtElem: arity mismatch in +");
    ExtElem r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
    if (arity_ != o.arity_) throw domain_error("ExtElem: arity mismatch in -");
    ExtElem r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ExtElem ExtElem::scaled(const NCPoly& c) const {
    ExtElem r(arity_);
    for (auto& [m, k] : terms_) r.add_term(m, c * k);
    return r;
}

ExtElem ExtElem::scaled(const RationalFn& c) const {
    ExtElem r(arity_);
    for (auto& [m, k] : terms_) r.add_term(m, k.scaled(c));
    return r;
}

long cross_inversions(const std::vector<int>& S, const std::vector<int>& T) {
    long c = 0;
    for (int s : S)
        for (int t : T)
            if (s > t) ++c;
    return c;
}

namespace {

// Merge of two disjoint sorted slots; nullopt when they overlap.
std::optional<std::vector<int>> merge_slots(const std::vector<int>& S, const std::vector<int>& T) {
    std::vector<int> u;
    u.reserve(S.size() + T.size());
    size_t i = 0, j = 0;
    while (i < S.size() && j < T.size()) {
        if (S[i] == T[j]) return std::nullopt;
        u.push_back(S[i] < T[j] ? S[i++] : T[j++]);
    }
    u.insert(u.end(), S.begin() + static_cast<long>(i), S.end());
    u.insert(u.end(), T.begin() + static_cast<long>(j), T.end());
    return u;
}

} // namespace

ExtElem wedge(const ExtElem& a, const ExtElem& b) {
    if (a.arity() != b.arity()) throw domain_error("wedge: slot arity mismatch");
    ExtElem r(a.arity());
    for (auto& [m1, c1] : a.terms()) {
        for (auto& [m2, c2] : b.terms()) {
            long inv = 0;
            std::vector<std::vector<int>> slots;
            slots.reserve(a.arity());
            bool ok = true;
            for (size_t t = 0; t < a.arity(); ++t) {
                auto merged = merge_slots(m1.slots[t], m2.slots[t]);
                if (!merged) {
                    ok = false;
                    break;
                }
                inv += cross_inversions(m1.slots[t], m2.slots[t]);
                slots.push_back(std::move(*merged));
            }
            if (!ok) continue;
            NCPoly c = (c1 * c2).scaled(RationalFn::neg_q_power(inv));
            r.add_term(ExtMono{std::move(slots)}, c);
        }
    }
    return r;
}

ExtElem wedge_power(const ExtElem& e, int n) {
    if (n < 1) throw domain_error("wedge_power: n must be positive");
    ExtElem r = e;
    for (int i = 1; i < n; ++i) r = wedge(r, e);
    return r;
}

NCPoly coeff_of(const ExtElem& e, const ExtMono& mono) {
    auto it = e.terms().find(mono);
    return it == e.terms().end() ? NCPoly() : it->second;
}

std::vector<ExtElem> omega_vector(const HyperAlgebra& alg, int axis) {
    const HyperShape& shape = alg.shape;
    if (axis < 1 || axis > shape.axes()) throw domain_error("omega_vector: bad axis");
    size_t arity = static_cast<size_t>(shape.axes() - 1);
    std::vector<ExtElem> out;
    auto alphas = all_indices_omitting(shape, axis);
    for (int i = 1; i <= shape.dim(axis); ++i) {
        ExtElem w(arity);
        for (auto& alpha : alphas) {
            std::vector<std::vector<int>> slots;
            slots.reserve(arity);
            for (int v : alpha) slots.push_back({v});
            w.add_term(ExtMono{std::move(slots)},
                       NCPoly::gen(alg.gen(realign_index_inverse(shape, axis, i, alpha))));
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<ExtElem> eta_vector(const HyperAlgebra& alg, int axis) {
    const HyperShape& shape = alg.shape;
    size_t arity = static_cast<size_t>(shape.axes());
    std::vector<ExtElem> out;
    auto omegas = omega_vector(alg, axis);
    for (int i = 1; i <= shape.dim(axis); ++i) {
        ExtElem e(arity);
        for (auto& [m, c] : omegas[static_cast<size_t>(i - 1)].terms()) {
            std::vector<std::vector<int>> slots;
            slots.reserve(arity);
            slots.push_back({i});
            for (auto& s : m.slots) slots.push_back(s);
            e.add_term(ExtMono{std::move(slots)}, c);
        }
        out.push_back(std::move(e));
    }
    return out;
}

ExtElem omega_capital(const HyperAlgebra& alg, int axis) {
    auto etas = eta_vector(alg, axis);
    ExtElem r(static_cast<size_t>(alg.shape.axes()));
    for (auto& e : etas) r = r + e;
    return r;
}

ExtMono top_mono_omitting(const HyperShape& shape, int axis) {
    std::vector<std::vector<int>> slots;
    for (int t = 1; t <= shape.axes(); ++t) {
        if (t == axis) continue;
        std::vector<int> full(static_cast<size_t>(shape.dim(t)));
        std::iota(full.begin(), full.end(), 1);
        slots.push_back(std::move(full));
    }
    return ExtMono{std::move(slots)};
}

ExtMono top_mono(const HyperShape& shape) {
    std::vector<std::vector<int>> slots;
    for (int t = 1; t <= shape.axes(); ++t) {
        std::vector<int> full(static_cast<size_t>(shape.dim(t)));
        std::iota(full.begin(), full.end(), 1);
        slots.push_back(std::move(full));
    }
    return ExtMono{std::move(slots)};
}

} // namespace qhyper
