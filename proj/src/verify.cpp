#include "qhyper/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <deque>
#include <random>
#include <set>

namespace qhyper {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::member_exact: return "member_exact";
        case Verdict::member_specialized: return "member_specialized";
        case Verdict::nonmember: return "nonmember";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct SymbolicRow {
    std::vector<std::pair<Word, RationalFn>> entries;
};

struct Closure {
    std::map<Word, int> words;           // discovery set
    std::vector<SymbolicRow> rows;
    bool truncated = false;
    std::string reason;
};

// Rows u * r * v of the homogeneous degree-d span that are connected to the
// element's support.  A row is reachable when some term word of some relation
// occurs as an adjacent pair inside a known word's component segment; the
// canonical (u, v) reconstruction makes the dedup key unique per row.
Closure build_closure(const std::vector<NCPoly>& elements, const std::vector<NCPoly>& relations,
                      const MembershipLimits& limits) {
    Closure cl;
    struct RelTerm {
        GenId first, second;
        RationalFn coeff;
    };
    struct Rel {
        std::vector<RelTerm> terms;
    };
    std::vector<Rel> rels;
    std::map<std::pair<GenId, GenId>, std::vector<size_t>> pattern_index;
    for (auto& r : relations) {
        Rel rel;
        for (auto& [w, c] : r.terms()) {
            if (w.letters.size() != 2) throw domain_error("ideal_membership: relations must be quadratic");
            if (w.letters[0].component != w.letters[1].component)
                throw domain_error("ideal_membership: relations must live in one component");
            rel.terms.push_back({w.letters[0], w.letters[1], c});
        }
        size_t ri = rels.size();
        for (auto& t : rel.terms) pattern_index[{t.first, t.second}].push_back(ri);
        rels.push_back(std::move(rel));
    }

    std::deque<Word> queue;
    auto see = [&](const Word& w) {
        if (cl.words.emplace(w, static_cast<int>(cl.words.size())).second) queue.push_back(w);
    };
    for (auto& e : elements)
        for (auto& [w, c] : e.terms()) see(w);

    std::set<std::tuple<size_t, Word, Word>> row_keys;
    while (!queue.empty()) {
        if (cl.words.size() > limits.max_basis_words) {
            cl.truncated = true;
            cl.reason = "basis dimension limit exceeded";
            return cl;
        }
        Word w = queue.front();
        queue.pop_front();
        for (size_t p = 0; p + 1 < w.letters.size(); ++p) {
            if (w.letters[p].component != w.letters[p + 1].component) continue;
            auto it = pattern_index.find({w.letters[p], w.letters[p + 1]});
            if (it == pattern_index.end()) continue;
            Word u{std::vector<GenId>(w.letters.begin(), w.letters.begin() + static_cast<long>(p))};
            Word v{std::vector<GenId>(w.letters.begin() + static_cast<long>(p) + 2, w.letters.end())};
            for (size_t ri : it->second) {
                if (!row_keys.emplace(ri, u, v).second) continue;
                SymbolicRow row;
                for (auto& t : rels[ri].terms) {
                    std::vector<GenId> ls = u.letters;
                    ls.push_back(t.first);
                    ls.push_back(t.second);
                    ls.insert(ls.end(), v.letters.begin(), v.letters.end());
                    // Splicing two same-component letters into a canonical word
                    // at a same-component position keeps it canonical.
                    row.entries.push_back({Word{std::move(ls)}, t.coeff});
                }
                for (auto& [rw, rc] : row.entries) see(rw);
                cl.rows.push_back(std::move(row));
                if (cl.rows.size() > limits.max_rows) {
                    cl.truncated = true;
                    cl.reason = "span row limit exceeded";
                    return cl;
                }
            }
        }
    }
    return cl;
}

template <class F>
bool coeff_is_zero(const F& x) {
    if constexpr (std::is_same_v<F, RationalFn>)
        return x.is_zero();
    else
        return x == 0;
}

// Sparse row over column indices, entries ascending, leading entry first.
template <class F>
using SparseRow = std::vector<std::pair<int, F>>;

template <class F>
SparseRow<F> axpy(const SparseRow<F>& a, const F& c, const SparseRow<F>& b) {
    // a - c * b
    SparseRow<F> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            F x = c * b[j].second;
            if (!coeff_is_zero(x)) out.push_back({b[j].first, -x});
            ++j;
        } else {
            F x = a[i].second - c * b[j].second;
            if (!coeff_is_zero(x)) out.push_back({a[i].first, x});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
struct Eliminator {
    std::vector<std::optional<SparseRow<F>>> pivots;

    explicit Eliminator(size_t ncols) : pivots(ncols) {}

    SparseRow<F> reduce(SparseRow<F> row) const {
        for (;;) {
            if (row.empty()) return row;
            auto& piv = pivots[static_cast<size_t>(row.front().first)];
            if (!piv) return row;
            row = axpy(row, row.front().second, *piv);
        }
    }

    void insert(SparseRow<F> row) {
        row = reduce(std::move(row));
        if (row.empty()) return;
        F lead = row.front().second;
        for (auto& [i, c] : row) c = c / lead;
        pivots[static_cast<size_t>(row.front().first)] = std::move(row);
    }
};

} // namespace

MembershipReport ideal_membership_all(const std::vector<NCPoly>& elements,
                                      const std::vector<NCPoly>& relations,
                                      const MembershipOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    MembershipReport rep;
    rep.seed = opt.seed;
    rep.mode = opt.mode == MembershipMode::exact ? "exact" : "specialize";

    std::vector<NCPoly> live;
    for (auto& e : elements) {
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) throw domain_error("ideal_membership: element must be homogeneous");
        live.push_back(e);
    }
    auto finish = [&](Verdict v, std::string note) {
        rep.verdict = v;
        rep.note = std::move(note);
        rep.millis = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - start)
                                           .count());
        return rep;
    };
    if (live.empty()) {
        rep.mode = "exact-zero";
        return finish(Verdict::member_exact, "element is identically zero");
    }

    Closure cl = build_closure(live, relations, opt.limits);
    rep.basis_words = cl.words.size();
    rep.rows = cl.rows.size();
    if (cl.truncated) return finish(Verdict::inconclusive, cl.reason);

    // Column order: larger words first, so reduction eliminates leading words.
    std::vector<const Word*> order;
    order.reserve(cl.words.size());
    for (auto& [w, idx] : cl.words) order.push_back(&w);
    std::sort(order.begin(), order.end(), [](const Word* a, const Word* b) { return *b < *a; });
    std::map<Word, int> col;
    for (size_t i = 0; i < order.size(); ++i) col[*order[i]] = static_cast<int>(i);

    auto to_sparse = [&](const auto& entries, auto eval) {
        using F = decltype(eval(RationalFn(1)));
        SparseRow<F> row;
        for (auto& [w, c] : entries) {
            F x = eval(c);
            if (!coeff_is_zero(x)) row.push_back({col.at(w), x});
        }
        std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
        // Merge duplicate columns (distinct relation terms may splice to one word).
        SparseRow<F> merged;
        for (auto& [i, c] : row) {
            if (!merged.empty() && merged.back().first == i) {
                merged.back().second += c;
                if (coeff_is_zero(merged.back().second)) merged.pop_back();
            } else {
                merged.push_back({i, c});
            }
        }
        return merged;
    };

    auto run = [&](auto eval) {
        using F = decltype(eval(RationalFn(1)));
        Eliminator<F> elim(cl.words.size());
        for (auto& r : cl.rows) elim.insert(to_sparse(r.entries, eval));
        for (auto& e : live) {
            auto residual = elim.reduce(to_sparse(e.terms(), eval));
            if (!residual.empty()) return false;
        }
        return true;
    };

    if (opt.mode == MembershipMode::exact) {
        bool member = run([](const RationalFn& c) { return c; });
        if (member) return finish(Verdict::member_exact, "");
        // Attach a rational witness when one of the samples also refutes.
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> num(2, 9), den(1, 5);
        for (int attempt = 0; attempt < 20; ++attempt) {
            Rat r0(num(rng), den(rng));
            r0.canonicalize();
            if (r0 == 1) continue;
            Rat q0 = r0 * r0;
            try {
                bool ok = run([&](const RationalFn& c) { return c.eval_at_q(q0); });
                if (!ok) {
                    rep.witness_q0 = q0;
                    return finish(Verdict::nonmember, "nonzero residual over the function field");
                }
            } catch (const eval_error&) {
                continue;
            }
        }
        return finish(Verdict::nonmember,
                      "nonzero residual over the function field (no rational witness sampled)");
    }

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> num(2, 9), den(1, 5);
    int done = 0;
    int guard = 0;
    while (done < opt.samples) {
        if (++guard > 200) return finish(Verdict::inconclusive, "could not sample admissible q0");
        Rat r0(num(rng), den(rng));
        r0.canonicalize();
        if (r0 == 1) continue;
        Rat q0 = r0 * r0;
        bool ok;
        try {
            ok = run([&](const RationalFn& c) { return c.eval_at_q(q0); });
        } catch (const eval_error&) {
            continue;  // pole of some coefficient at this q0
        }
        rep.sampled_q0.push_back(q0);
        if (!ok) {
            rep.witness_q0 = q0;
            return finish(Verdict::nonmember, "nonzero residual at sampled q0");
        }
        ++done;
    }
    return finish(Verdict::member_specialized, "");
}

MembershipReport ideal_membership(const NCPoly& element, const std::vector<NCPoly>& relations,
                                  const MembershipOptions& opt) {
    return ideal_membership_all(std::vector<NCPoly>{element}, relations, opt);
}

std::string report_to_json(const std::string& id, const std::string& params,
                           const MembershipReport& report, bool include_millis) {
    nlohmann::json j;
    j["id"] = id;
    j["params"] = params;
    j["verdict"] = verdict_name(report.verdict);
    j["mode"] = report.mode;
    j["dims"] = {{"basis_words", report.basis_words}, {"rows", report.rows}};
    j["seed"] = report.seed;
    if (include_millis) j["millis"] = report.millis;
    if (!report.note.empty()) j["note"] = report.note;
    if (!report.sampled_q0.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& q : report.sampled_q0) arr.push_back(q.get_str());
        j["q0"] = arr;
    }
    if (report.witness_q0) j["witness_q0"] = report.witness_q0->get_str();
    return j.dump();
}

} // namespace qhyper
