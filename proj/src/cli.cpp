#include "qhyper/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "qhyper/hyperalg.hpp"
#include "qhyper/pfaffian.hpp"
#include "qhyper/registry.hpp"
#include "qhyper/render.hpp"

namespace qhyper {

namespace {

std::string render(const NCPoly& p, const std::string& format) {
    if (format == "latex") return to_latex(p);
    if (format == "json") return to_json(p);
    return to_text(p);
}

uint64_t env_seed() {
    if (const char* s = std::getenv("QHYPER_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v != 0) return static_cast<uint64_t>(v);
    }
    return 0;
}

std::vector<std::vector<int>> parse_sets(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> set;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) set.push_back(std::stoi(item));
        out.push_back(std::move(set));
    }
    return out;
}

std::string verify_text(const CheckOutcome& out) {
    std::ostringstream os;
    os << "id: " << out.id << "\n";
    os << "params: " << out.params_text << "\n";
    os << "verdict: " << verdict_name(out.report.verdict) << "\n";
    os << "mode: " << out.report.mode << "\n";
    os << "dims: words=" << out.report.basis_words << " rows=" << out.report.rows << "\n";
    os << "seed: " << out.report.seed << "\n";
    if (!out.report.sampled_q0.empty()) {
        os << "q0:";
        for (auto& q : out.report.sampled_q0) os << " " << q.get_str();
        os << "\n";
    }
    if (out.report.witness_q0) os << "witness_q0: " << out.report.witness_q0->get_str() << "\n";
    if (!out.report.note.empty()) os << "note: " << out.report.note << "\n";
    return os.str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact quantum hypermatrix algebra toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (reserved; evaluation is sequential)");

    std::string format = "text";

    // --- det ---
    auto* det = app.add_subcommand("det", "expand a quantum hyperdeterminant");
    int dn = 2, dm = 3, daxis = 0;
    bool dnorm = false;
    det->add_option("--n", dn, "axis dimension");
    det->add_option("--m", dm, "number of axes");
    det->add_option("--fixed-axis", daxis, "unpermuted axis (fixed-axis form)");
    det->add_flag("--normalized", dnorm, "all-axes sum divided by [n]_{q^2}!");
    det->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

    // --- pf ---
    auto* pf = app.add_subcommand("pf", "expand a quantum hyper-Pfaffian");
    int pk = 2, pm = 1, pblocks = 2;
    std::string pvariant = "prime";
    pf->add_option("--k", pk, "block size");
    pf->add_option("--m", pm, "axis-group count");
    pf->add_option("--blocks", pblocks, "number of blocks");
    pf->add_option("--variant", pvariant)->check(CLI::IsMember({"prime", "recursive", "full"}));
    pf->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

    // --- minor ---
    auto* minor = app.add_subcommand("minor", "expand a quantum minor hyperdeterminant");
    int mn = 2, mm = 2, mr = 1;
    std::string msets;
    minor->add_option("--n", mn, "axis dimension");
    minor->add_option("--m", mm, "number of axes");
    minor->add_option("--r", mr, "minor size");
    minor->add_option("--sets", msets, "semicolon-separated per-axis subsets, e.g. 1,2;1,3");
    minor->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

    // --- relations ---
    auto* rels = app.add_subcommand("relations", "print the defining quadratic relations");
    int rn = 2, rm = 2, rk = 0, rblocks = 0;
    rels->add_option("--n", rn, "axis dimension");
    rels->add_option("--m", rm, "number of axes (or axis groups with --k)");
    rels->add_option("--k", rk, "block size: emit Pfaffian exchange relations instead");
    rels->add_option("--blocks", rblocks, "number of blocks for the Pfaffian relations");
    rels->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run a registered identity check");
    std::string vid;
    CheckParams vp;
    std::string vmode;
    verify->add_option("id", vid, "registered check id")->required();
    verify->add_option("--n", vp.n);
    verify->add_option("--m", vp.m);
    verify->add_option("--l", vp.l);
    verify->add_option("--k", vp.k);
    verify->add_option("--axis", vp.axis);
    verify->add_option("--r", vp.r);
    verify->add_option("--t", vp.t);
    verify->add_option("--blocks", vp.blocks);
    verify->add_option("--kprime", vp.kprime);
    verify->add_option("--p", vp.p);
    verify->add_option("--instances", vp.instances);
    verify->add_option("--mode", vmode)->check(CLI::IsMember({"exact", "specialize"}));
    verify->add_option("--samples", vp.samples);
    verify->add_option("--seed", vp.seed);
    verify->add_option("--max-dim", vp.max_dim);
    verify->add_option("--max-rows", vp.max_rows);
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // --- list ---
    auto* list = app.add_subcommand("list", "list the registered identity checks");
    list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 64;
    }

    if (threads > 1) err << "note: built sequential; --threads ignored\n";

    try {
        if (*det) {
            HyperAlgebra alg{HyperShape::cubical(dn, dm), 0, 'a'};
            NCPoly p;
            if (dnorm) {
                p = hyperdet_normalized(alg);
            } else {
                p = hyperdet_fixed(alg, daxis > 0 ? daxis : 1);
            }
            out << render(p, format) << "\n";
            return 0;
        }
        if (*pf) {
            PfAlgebra alg{PfShape{pk, pm, pblocks}, 0, 'b'};
            NCPoly p;
            if (pvariant == "prime") p = pf_prime(alg);
            else if (pvariant == "recursive") p = pf_recursive(alg);
            else p = pf_full(alg);
            out << render(p, format) << "\n";
            return 0;
        }
        if (*minor) {
            HyperAlgebra alg{HyperShape::cubical(mn, mm), 0, 'a'};
            std::vector<std::vector<int>> sets;
            if (msets.empty()) {
                std::vector<int> head;
                for (int i = 1; i <= mr; ++i) head.push_back(i);
                sets.assign(static_cast<size_t>(mm), head);
            } else {
                sets = parse_sets(msets);
            }
            out << render(minor_xi(alg, sets), format) << "\n";
            return 0;
        }
        if (*rels) {
            std::vector<NCPoly> relations;
            if (rk > 0) {
                PfAlgebra alg{PfShape{rk, rm, rblocks > 0 ? rblocks : 2}, 0, 'b'};
                relations = hypf_relations(alg);
            } else {
                HyperAlgebra alg{HyperShape::cubical(rn, rm), 0, 'a'};
                relations = hyper_relations(alg);
            }
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (auto& r : relations) arr.push_back(nlohmann::json::parse(to_json(r)));
                out << arr.dump() << "\n";
            } else {
                for (auto& r : relations) out << render(r, format) << "\n";
            }
            return 0;
        }
        if (*verify) {
            if (!check_registered(vid)) {
                err << "unknown check id '" << vid << "'; see `qhyper list`\n";
                return 64;
            }
            if (vmode == "exact") vp.mode = 1;
            if (vmode == "specialize") vp.mode = 2;
            if (vp.seed == 0) vp.seed = env_seed();
            CheckOutcome res = check_theorem(vid, vp);
            if (format == "json") {
                out << report_to_json(res.id, res.params_text, res.report) << "\n";
            } else {
                out << verify_text(res);
            }
            err << "elapsed: " << res.report.millis << " ms\n";
            if (res.pass) return 0;
            return res.report.verdict == Verdict::inconclusive ? 2 : 1;
        }
        if (*list) {
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (auto& e : check_registry())
                    arr.push_back({{"id", e.id}, {"description", e.description}, {"defaults", e.default_sizes}});
                out << arr.dump() << "\n";
            } else {
                for (auto& e : check_registry())
                    out << e.id << "\n    " << e.description << "\n    defaults: " << e.default_sizes
                        << "\n";
            }
            return 0;
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}

} // namespace qhyper
