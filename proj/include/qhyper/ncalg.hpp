#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qhyper/ratfn.hpp"

namespace qhyper {

// One generator: a_{i1...im} etc., living in a tensor component.  Generators
// of distinct components commute with factor 1; within a component the
// algebra is free.
struct GenId {
    int component = 0;
    char name = 'a';
    std::vector<int> index;

    friend bool operator==(const GenId&, const GenId&) = default;
    friend std::strong_ordering operator<=>(const GenId& a, const GenId& b) {
        if (auto c = a.component <=> b.component; c != 0) return c;
        if (auto c = a.name <=> b.name; c != 0) return c;
        return a.index <=> b.index;
    }
};

GenId gen_a(std::vector<int> index, int component = 0);
GenId gen_b(std::vector<int> index, int component = 0);

// A monomial word.  Canonical form: letters stably sorted by component;
// within a component the original order is preserved.
struct Word {
    std::vector<GenId> letters;

    static Word of(std::vector<GenId> ls);
    Word concat(const Word& o) const;
    size_t degree() const { return letters.size(); }
    // Degree within one component.
    size_t degree_in(int component) const;

    friend bool operator==(const Word&, const Word&) = default;
    // Degree first, then lexicographic on letters: the global monomial order.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
        return a.letters <=> b.letters;
    }
};

void canonicalize_word(std::vector<GenId>& letters);

// Sparse noncommutative polynomial over the rational-function field.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly zero() { return NCPoly(); }
    static NCPoly one() { return scalar(RationalFn(1)); }
    static NCPoly scalar(RationalFn c);
    static NCPoly gen(GenId g);
    static NCPoly monomial(Word w, RationalFn c);

    const std::map<Word, RationalFn>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(Word w, const RationalFn& c);

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o) { return *this += -o; }
    NCPoly& operator*=(const NCPoly& o) { *this = *this * o; return *this; }

    NCPoly scaled(const RationalFn& c) const;

    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    // All terms share one word length; throws on the zero polynomial.
    bool is_homogeneous() const;
    size_t degree() const;
    const Word& leading_word() const;  // largest in the monomial order
    const RationalFn& leading_coeff() const;
    // Divide by the leading coefficient.
    NCPoly monic() const;

    RationalFn coeff(const Word& w) const;

private:
    std::map<Word, RationalFn> terms_;
};

NCPoly operator*(const RationalFn& c, const NCPoly& p);

// ---- permutations ----------------------------------------------------------

// One-line notation, images of 1..n (1-based values).
struct Perm {
    std::vector<int> img;

    static Perm identity(int n);
    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<size_t>(i - 1)]; }
    Perm inverse() const;
    Perm compose(const Perm& o) const;  // (this o other)(i) = this(other(i))
    bool is_valid() const;

    friend bool operator==(const Perm&, const Perm&) = default;
};

long inversions(const Perm& s);
std::vector<Perm> all_perms(int n);

// ---- subset / tuple combinatorics ------------------------------------------

// #{s : alpha_s > beta_s} for same-arity index tuples.
long inv_pair(const std::vector<int>& alpha, const std::vector<int>& beta);

// Sum over axes of #{(x,y) in I_t x J_t : x > y}.
long inv_blocks(const std::vector<std::vector<int>>& I, const std::vector<std::vector<int>>& J);

// ell(J) = sum(J) - |J|(|J|+1)/2.
long ell_subset(const std::vector<int>& J);

// The shuffle listing K ascending, then its complement in [1, domain]
// ascending.
Perm shuffle_perm(const std::vector<int>& K, int domain);

std::vector<int> complement_subset(const std::vector<int>& K, int domain);
std::vector<std::vector<int>> all_subsets(int domain, int size);
// Subsets of [1, domain] of the given size containing [1, forced_prefix].
std::vector<std::vector<int>> all_subsets_containing_prefix(int domain, int size, int forced_prefix);

// Relabel generator index tuples by an axis permutation:
// axis t of the image holds the old axis tau^{-1}(t).
NCPoly act_axis_perm(const Perm& tau, const NCPoly& p);

// Substitute commuting numeric values for the generators and evaluate the
// coefficients at q = q0.  Throws on a missing assignment or a pole.
Rat specialize_commutative(const NCPoly& p, const std::map<GenId, Rat>& assignment, const Rat& q0);

} // namespace qhyper
