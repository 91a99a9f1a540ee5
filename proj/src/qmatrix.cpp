#include "qhyper/qmatrix.hpp"

#include <algorithm>

namespace qhyper {

GenId QMatrixContext::gen(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw domain_error("QMatrixContext: index out of range");
    return GenId{component, name, {i, j}};
}

std::vector<GenId> QMatrixContext::all_generators() const {
    std::vector<GenId> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back(GenId{component, name, {i, j}});
    return out;
}

std::vector<NCPoly> matq_relations(int n, int component) {
    QMatrixContext ctx{n, component};
    std::vector<NCPoly> rels;
    RationalFn q = RationalFn::q_power(1);
    RationalFn qdiff = q - RationalFn::q_power(-1);
    auto A = [&](int i, int j) { return NCPoly::gen(ctx.gen(i, j)); };
    // Same row, columns k < l.
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                rels.push_back(A(i, k) * A(i, l) - q * (A(i, l) * A(i, k)));
    // Same column, rows i < j.
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                rels.push_back(A(i, k) * A(j, k) - q * (A(j, k) * A(i, k)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    rels.push_back(A(j, k) * A(i, l) - A(i, l) * A(j, k));
                    rels.push_back(A(i, k) * A(j, l) - A(j, l) * A(i, k) - qdiff * (A(i, l) * A(j, k)));
                }
    return rels;
}

namespace {

bool is_descent(const GenId& x, const GenId& y) {
    return x.component == y.component && x.name == y.name && x.index > y.index;
}

// Replacement for the out-of-order pair (x, y), x > y in (row, col) order.
// Returns terms (coeff, first, second).
struct PairTerm {
    RationalFn coeff;
    GenId first, second;
};

std::vector<PairTerm> rewrite_pair(const GenId& x, const GenId& y) {
    int r1 = x.index[0], c1 = x.index[1], r2 = y.index[0], c2 = y.index[1];
    std::vector<PairTerm> out;
    if (r1 == r2 || c1 == c2) {
        out.push_back({RationalFn::q_power(-1), y, x});
        return out;
    }
    if (c1 < c2) {  // r1 > r2, antidiagonal positions commute
        out.push_back({RationalFn(1), y, x});
        return out;
    }
    // r1 > r2, c1 > c2.
    out.push_back({RationalFn(1), y, x});
    GenId u = y, v = x;
    u.index = {r2, c1};
    v.index = {r1, c2};
    out.push_back({-(RationalFn::q_power(1) - RationalFn::q_power(-1)), u, v});
    return out;
}

class Reducer {
public:
    NCPoly reduce_word(const Word& w) {
        if (auto it = cache_.find(w); it != cache_.end()) return it->second;
        NCPoly result;
        size_t pos = w.letters.size();
        for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
            if (is_descent(w.letters[i], w.letters[i + 1])) {
                pos = i;
                break;
            }
        }
        if (pos == w.letters.size()) {
            result = NCPoly::monomial(w, RationalFn(1));
        } else {
            for (auto& term : rewrite_pair(w.letters[pos], w.letters[pos + 1])) {
                std::vector<GenId> ls = w.letters;
                ls[pos] = term.first;
                ls[pos + 1] = term.second;
                result += term.coeff * reduce_word(Word{std::move(ls)});
            }
        }
        cache_.emplace(w, result);
        return result;
    }

private:
    std::map<Word, NCPoly> cache_;
};

} // namespace

NCPoly normal_form(const NCPoly& p, const QMatrixContext& ctx) {
    (void)ctx;
    Reducer red;
    NCPoly out;
    for (auto& [w, c] : p.terms()) out += c * red.reduce_word(w);
    return out;
}

NCPoly normal_form_random_order(const NCPoly& p, int n, std::mt19937_64& rng) {
    (void)n;
    NCPoly work = p;
    for (;;) {
        // Collect every (word, position) descent over the current terms.
        std::vector<std::pair<Word, size_t>> descents;
        for (auto& [w, c] : work.terms())
            for (size_t i = 0; i + 1 < w.letters.size(); ++i)
                if (is_descent(w.letters[i], w.letters[i + 1])) descents.push_back({w, i});
        if (descents.empty()) return work;
        std::uniform_int_distribution<size_t> pick(0, descents.size() - 1);
        auto& [w, pos] = descents[pick(rng)];
        RationalFn c = work.coeff(w);
        work.add_term(w, -c);
        for (auto& term : rewrite_pair(w.letters[pos], w.letters[pos + 1])) {
            std::vector<GenId> ls = w.letters;
            ls[pos] = term.first;
            ls[pos + 1] = term.second;
            work.add_term(Word{std::move(ls)}, c * term.coeff);
        }
    }
}

NCPoly det_q_row(int n, int component) {
    QMatrixContext ctx{n, component};
    NCPoly det;
    for (auto& s : all_perms(n)) {
        std::vector<GenId> ls;
        for (int i = 1; i <= n; ++i) ls.push_back(ctx.gen(i, s(i)));
        det.add_term(Word{std::move(ls)}, RationalFn::neg_q_power(inversions(s)));
    }
    return det;
}

NCPoly det_q_col(int n, int component) {
    QMatrixContext ctx{n, component};
    NCPoly det;
    for (auto& s : all_perms(n)) {
        std::vector<GenId> ls;
        for (int i = 1; i <= n; ++i) ls.push_back(ctx.gen(s(i), i));
        det.add_term(Word{std::move(ls)}, RationalFn::neg_q_power(inversions(s)));
    }
    return det;
}

NCPoly coproduct_matq(const NCPoly& p, int n, int comp_left, int comp_right) {
    QMatrixContext L{n, comp_left}, R{n, comp_right};
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        NCPoly image = NCPoly::scalar(c);
        for (auto& g : w.letters) {
            if (g.index.size() != 2) throw domain_error("coproduct_matq: not a matrix generator");
            NCPoly sum;
            for (int k = 1; k <= n; ++k)
                sum += NCPoly::gen(L.gen(g.index[0], k)) * NCPoly::gen(R.gen(k, g.index[1]));
            image *= sum;
        }
        out += image;
    }
    return out;
}

} // namespace qhyper
