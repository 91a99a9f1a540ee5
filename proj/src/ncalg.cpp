#include "qhyper/ncalg.hpp"

#include <algorithm>
#include <numeric>

namespace qhyper {

GenId gen_a(std::vector<int> index, int component) { return GenId{component, 'a', std::move(index)}; }
GenId gen_b(std::vector<int> index, int component) { return GenId{component, 'b', std::move(index)}; }

void canonicalize_word(std::vector<GenId>& letters) {
    std::stable_sort(letters.begin(), letters.end(),
                     [](const GenId& x, const GenId& y) { return x.component < y.component; });
}

Word Word::of(std::vector<GenId> ls) {
    canonicalize_word(ls);
    return Word{std::move(ls)};
}

Word Word::concat(const Word& o) const {
    std::vector<GenId> ls = letters;
    ls.insert(ls.end(), o.letters.begin(), o.letters.end());
    return Word::of(std::move(ls));
}

size_t Word::degree_in(int component) const {
    size_t d = 0;
    for (auto& g : letters)
        if (g.component == component) ++d;
    return d;
}

NCPoly NCPoly::scalar(RationalFn c) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(Word{}, std::move(c));
    return p;
}

NCPoly NCPoly::gen(GenId g) {
    NCPoly p;
    p.terms_.emplace(Word{{std::move(g)}}, RationalFn(1));
    return p;
}

NCPoly NCPoly::monomial(Word w, RationalFn c) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

void NCPoly::add_term(Word w, const RationalFn& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    r += -o;
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) {
            RationalFn c = c1 * c2;
            if (!c.is_zero()) r.add_term(w1.concat(w2), c);
        }
    return r;
}

NCPoly NCPoly::scaled(const RationalFn& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, k] : terms_) {
        RationalFn p = k * c;
        if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
    }
    return r;
}

NCPoly operator*(const RationalFn& c, const NCPoly& p) { return p.scaled(c); }

bool NCPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    size_t d = terms_.begin()->first.degree();
    for (auto& [w, c] : terms_)
        if (w.degree() != d) return false;
    return true;
}

size_t NCPoly::degree() const {
    if (terms_.empty()) throw domain_error("degree of zero polynomial");
    return terms_.rbegin()->first.degree();
}

const Word& NCPoly::leading_word() const {
    if (terms_.empty()) throw domain_error("leading_word of zero polynomial");
    return terms_.rbegin()->first;
}

const RationalFn& NCPoly::leading_coeff() const {
    if (terms_.empty()) throw domain_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

NCPoly NCPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

RationalFn NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFn() : it->second;
}

// ---- permutations ----------------------------------------------------------

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(static_cast<size_t>(n));
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

bool Perm::is_valid() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 1 || v > static_cast<int>(img.size())) return false;
        if (seen[static_cast<size_t>(v - 1)]) return false;
        seen[static_cast<size_t>(v - 1)] = true;
    }
    return true;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[static_cast<size_t>(img[i] - 1)] = static_cast<int>(i) + 1;
    return r;
}

Perm Perm::compose(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[static_cast<size_t>(o.img[i] - 1)];
    return r;
}

long inversions(const Perm& s) {
    long c = 0;
    for (size_t i = 0; i < s.img.size(); ++i)
        for (size_t j = i + 1; j < s.img.size(); ++j)
            if (s.img[i] > s.img[j]) ++c;
    return c;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = Perm::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

// ---- subset / tuple combinatorics ------------------------------------------

long inv_pair(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw domain_error("inv_pair: arity mismatch");
    long c = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) ++c;
    return c;
}

long inv_blocks(const std::vector<std::vector<int>>& I, const std::vector<std::vector<int>>& J) {
    if (I.size() != J.size()) throw domain_error("inv_blocks: axis count mismatch");
    long c = 0;
    for (size_t t = 0; t < I.size(); ++t)
        for (int x : I[t])
            for (int y : J[t])
                if (x > y) ++c;
    return c;
}

long ell_subset(const std::vector<int>& J) {
    long s = 0;
    for (int i : J) s += i;
    long r = static_cast<long>(J.size());
    return s - r * (r + 1) / 2;
}

std::vector<int> complement_subset(const std::vector<int>& K, int domain) {
    std::vector<bool> in(static_cast<size_t>(domain) + 1, false);
    for (int k : K) in[static_cast<size_t>(k)] = true;
    std::vector<int> out;
    for (int i = 1; i <= domain; ++i)
        if (!in[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

Perm shuffle_perm(const std::vector<int>& K, int domain) {
    Perm p;
    p.img = K;
    std::sort(p.img.begin(), p.img.end());
    std::vector<int> rest = complement_subset(p.img, domain);
    p.img.insert(p.img.end(), rest.begin(), rest.end());
    if (!p.is_valid()) throw domain_error("shuffle_perm: K is not a subset of [1, domain]");
    return p;
}

std::vector<std::vector<int>> all_subsets(int domain, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > domain) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        int need = size - static_cast<int>(cur.size());
        for (int v = next; v + need - 1 <= domain; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<std::vector<int>> all_subsets_containing_prefix(int domain, int size, int forced_prefix) {
    std::vector<std::vector<int>> out;
    if (forced_prefix > size) return out;
    for (auto& tail : all_subsets(domain - forced_prefix, size - forced_prefix)) {
        std::vector<int> s;
        for (int i = 1; i <= forced_prefix; ++i) s.push_back(i);
        for (int v : tail) s.push_back(v + forced_prefix);
        out.push_back(std::move(s));
    }
    return out;
}

NCPoly act_axis_perm(const Perm& tau, const NCPoly& p) {
    Perm inv = tau.inverse();
    size_t m = static_cast<size_t>(tau.size());
    NCPoly r;
    for (auto& [w, c] : p.terms()) {
        std::vector<GenId> letters;
        letters.reserve(w.letters.size());
        for (auto& g : w.letters) {
            if (g.index.size() != m) throw domain_error("act_axis_perm: index arity mismatch");
            GenId h = g;
            for (size_t t = 0; t < m; ++t)
                h.index[t] = g.index[static_cast<size_t>(inv.img[t] - 1)];
            letters.push_back(std::move(h));
        }
        r.add_term(Word::of(std::move(letters)), c);
    }
    return r;
}

Rat specialize_commutative(const NCPoly& p, const std::map<GenId, Rat>& assignment, const Rat& q0) {
    Rat acc(0);
    for (auto& [w, c] : p.terms()) {
        Rat v = c.eval_at_q(q0);
        for (auto& g : w.letters) {
            auto it = assignment.find(g);
            if (it == assignment.end()) throw domain_error("specialize_commutative: missing assignment");
            v *= it->second;
        }
        acc += v;
    }
    return acc;
}

} // namespace qhyper
