#pragma once

#include "qhyper/hypermatrix.hpp"

namespace qhyper {

// Monomial of a tensor power of quantum exterior algebras: one strictly
// increasing index subset per tensor slot.  Empty slots are degree 0.
struct ExtMono {
    std::vector<std::vector<int>> slots;

    static ExtMono of(std::vector<std::vector<int>> s);
    size_t arity() const { return slots.size(); }

    friend bool operator==(const ExtMono&, const ExtMono&) = default;
    friend std::strong_ordering operator<=>(const ExtMono& a, const ExtMono& b) {
        return a.slots <=> b.slots;
    }
};

// Element of A (x) Lambda^{(x) t}: exterior monomials with noncommutative
// polynomial coefficients.  Algebra coefficients commute with the x letters,
// so a coefficient simply multiplies on the left.
class ExtElem {
public:
    ExtElem() = default;
    explicit ExtElem(size_t arity) : arity_(arity) {}

    static ExtElem term(ExtMono m, NCPoly c);

    size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExtMono, NCPoly>& terms() const { return terms_; }

    void add_term(ExtMono m, const NCPoly& c);

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem scaled(const NCPoly& c) const;
    ExtElem scaled(const RationalFn& c) const;

    friend bool operator==(const ExtElem&, const ExtElem&) = default;

private:
    size_t arity_ = 0;
    std::map<ExtMono, NCPoly> terms_;
};

// Slotwise quantum wedge: x_S ^ x_T = 0 on overlap, otherwise
// (-q)^{cross(S,T)} x_{S u T} with cross counting the pairs s > t.
// Coefficients multiply in encounter order.
ExtElem wedge(const ExtElem& a, const ExtElem& b);

// Left-associated n-fold wedge power.
ExtElem wedge_power(const ExtElem& e, int n);

NCPoly coeff_of(const ExtElem& e, const ExtMono& mono);

// Number of pairs (s, t) in S x T with s > t.
long cross_inversions(const std::vector<int>& S, const std::vector<int>& T);

// Row vectors of the k-th realignment: entry i is
// sum_alpha a^{(k)}_{i,alpha} x_alpha, with m-1 degree-1 slots.
std::vector<ExtElem> omega_vector(const HyperAlgebra& alg, int axis);

// eta_i = x_i (x) omega_i, an m-slot element; slot 0 carries x_i.
std::vector<ExtElem> eta_vector(const HyperAlgebra& alg, int axis);

// Omega_k = sum_i eta_i.
ExtElem omega_capital(const HyperAlgebra& alg, int axis);

// The full monomial on the omitted axes: slot t = [1, n_t].
ExtMono top_mono_omitting(const HyperShape& shape, int axis);
// The full monomial on all axes: slot t = [1, n_t].
ExtMono top_mono(const HyperShape& shape);

} // namespace qhyper
