// Command-line workbench: axiom checking, theorem verification and corpus
// generation with machine-readable JSON reports.
//
// Exit codes: 0 = all verified, 1 = mathematical finding or failed
// precondition, 2 = input error, 3 = resource refusal.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "menger/abstract.hpp"
#include "menger/enumeration.hpp"
#include "menger/nfun.hpp"
#include "menger/representation.hpp"
#include "menger/stationary.hpp"

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitInput = 2;
constexpr int kExitRefusal = 3;

struct CommonOpts {
    std::string input;
    std::string output;
    int m = 2;
    int n = 1;
    std::size_t max_members = menger::kDefaultMemberCap;
    int exhaustive_cap = menger::kDefaultExhaustiveCap;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string corpus_output;
};

ordered_json report_header(const std::string& command, const CommonOpts& o) {
    ordered_json cfg;
    cfg["input"] = o.input;
    cfg["output"] = o.output;
    cfg["m"] = o.m;
    cfg["n"] = o.n;
    cfg["max_members"] = o.max_members;
    cfg["exhaustive_cap"] = o.exhaustive_cap;
    cfg["seed"] = o.seed;
    cfg["jobs"] = o.jobs;
    ordered_json h;
    h["tool"] = "menger";
    h["version"] = kToolVersion;
    h["command"] = command;
    h["config"] = std::move(cfg);
    return h;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    return nlohmann::json::parse(in);
}

ordered_json check_to_json(const menger::AxiomCheck& c) {
    ordered_json j;
    j["pass"] = c.pass;
    j["counterexample"] =
        c.pass ? ordered_json(nullptr) : ordered_json(c.counterexample);
    return j;
}

ordered_json axiom_report_to_json(const menger::AxiomReport& rep) {
    ordered_json j;
    j["semilattice"] = check_to_json(rep.semilattice);
    for (int i = 0; i < 10; ++i)
        j["A" + std::to_string(i + 1)] =
            check_to_json(rep.axiom[static_cast<std::size_t>(i)]);
    j["all_pass"] = rep.all_pass();
    return j;
}

ordered_json implication_to_json(const menger::ImplicationCheck& c) {
    ordered_json j;
    j["verdict"] = menger::to_string(c.verdict);
    if (c.verdict == menger::Verdict::Fail) j["counterexample"] = c.counterexample;
    return j;
}

ordered_json prop1_to_json(const menger::Prop1Report& rep) {
    ordered_json j;
    for (int i = 0; i < 8; ++i)
        j["eq" + std::to_string(i + 5)] =
            implication_to_json(rep.implication[static_cast<std::size_t>(i)]);
    j["ok"] = rep.ok();
    return j;
}

ordered_json verdict_line(const menger::TheoremVerdict& tv) {
    ordered_json j;
    j["H"] = menger::subset_bitmask(tv.h);
    j["syntactic"] = tv.syntactic.pass;
    j["semantic"] = tv.semantic ? ordered_json(tv.semantic->pass)
                                : ordered_json(nullptr);
    j["failing_condition"] = tv.syntactic.pass
                                 ? ordered_json(nullptr)
                                 : ordered_json(tv.syntactic.failing_condition);
    if (tv.semantic) {
        ordered_json w;
        w["representation_ok"] = tv.semantic->representation_ok;
        w["faithful"] = tv.semantic->faithful;
        w["condition14_ok"] = tv.semantic->condition14_ok;
        ordered_json fps = ordered_json::array();
        for (const auto& t : tv.semantic->fixed_point_witnesses)
            fps.push_back({t[0], t[1], t[2]});
        w["fixed_points"] = std::move(fps);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

// Per-instance corpus verification summary.  `findings` collects every
// violated property so the aggregate can stay small when all is well.
struct InstanceResult {
    ordered_json summary;
    int findings = 0;
    int subsets = 0;
};

InstanceResult verify_instance(const menger::ConcreteAlgebra& phi,
                               int exhaustive_cap, std::uint64_t seed) {
    InstanceResult res;
    ordered_json& j = res.summary;
    j["size"] = phi.size();

    menger::AbstractAlgebra g = menger::abstractify(phi);
    j["zero"] = g.zero ? ordered_json(*g.zero) : ordered_json(nullptr);

    menger::AxiomReport axioms = menger::check_axioms(g);
    j["axioms_pass"] = axioms.all_pass();
    if (!axioms.all_pass()) {
        j["axioms"] = axiom_report_to_json(axioms);
        ++res.findings;
    }

    menger::Prop1Report prop1 = menger::check_proposition1(phi, g.zero);
    if (!prop1.ok()) {
        j["proposition1"] = prop1_to_json(prop1);
        ++res.findings;
    }
    j["proposition1_ok"] = prop1.ok();

    menger::ImplicationCheck nulleq = menger::check_null_equivalence(phi, g.zero);
    j["null_equivalence"] = menger::to_string(nulleq.verdict);
    if (nulleq.verdict == menger::Verdict::Fail) ++res.findings;

    menger::Subset st = menger::stationary_subset(phi);
    if (!g.zero) {
        // Zero-free shortcut: St(Phi) must equal Phi.
        bool all = menger::subset_count(st) == phi.size();
        j["zero_free_st_is_all"] = all;
        if (!all) ++res.findings;
        return res;
    }

    menger::StationaryAnalyzer an(g);

    // Necessity grounded in the true model: abstractified St passes syntax.
    if (menger::subset_count(st) > 0) {
        menger::SyntacticVerdict necessity = an.syntactic(st);
        j["necessity_St_pass"] = necessity.pass;
        if (!necessity.pass) {
            j["necessity_failing_condition"] = necessity.failing_condition;
            ++res.findings;
        }
    } else {
        j["necessity_St_pass"] = "skipped-empty";
    }

    auto verdicts = menger::verify_theorem_T5a(an, exhaustive_cap,
                                               menger::kDefaultSampleCount, seed);
    int syn_pass = 0, sem_pass = 0, mismatches = 0, tprop_fail = 0,
        cor18_fail = 0;
    ordered_json mismatch_list = ordered_json::array();
    for (const auto& tv : verdicts) {
        if (tv.syntactic.pass) ++syn_pass;
        if (tv.semantic && tv.semantic->pass) ++sem_pass;
        if (!tv.consistent()) {
            ++mismatches;
            mismatch_list.push_back(verdict_line(tv));
        }
        if (tv.syntactic.pass && tv.semantic && tv.semantic->pass) {
            if (menger::check_corollary_18(g, tv.h).verdict ==
                menger::Verdict::Fail)
                ++cor18_fail;
            if (!menger::check_theorem_Tprop(an, tv.h).ok()) ++tprop_fail;
        }
    }
    res.subsets = static_cast<int>(verdicts.size());
    j["subsets_swept"] = res.subsets;
    j["syntactic_passing"] = syn_pass;
    j["semantic_passing"] = sem_pass;
    j["theorem_mismatches"] = mismatches;
    j["corollary18_failures"] = cor18_fail;
    j["derived_property_failures"] = tprop_fail;
    if (mismatches > 0) j["mismatches"] = std::move(mismatch_list);
    res.findings += mismatches + tprop_fail + cor18_fail;
    return res;
}

int cmd_check_axioms(const CommonOpts& opts) {
    ordered_json report = report_header("check-axioms", opts);
    menger::AbstractAlgebra g;
    try {
        from_json(load_json(opts.input), g);
    } catch (const std::exception& e) {
        report["error"] = e.what();
        write_text(opts.output, report.dump(2) + "\n");
        return kExitInput;
    }
    menger::AxiomReport rep = menger::check_axioms(g);
    report["report"] = axiom_report_to_json(rep);
    write_text(opts.output, report.dump(2) + "\n");
    return rep.all_pass() ? kExitOk : kExitFinding;
}

int cmd_verify(const CommonOpts& opts) {
    ordered_json header = report_header("verify", opts);
    menger::AbstractAlgebra g;
    std::optional<menger::ConcreteAlgebra> phi;
    try {
        nlohmann::json in = load_json(opts.input);
        if (in.contains("members")) {
            phi = in.get<menger::ConcreteAlgebra>();
            g = menger::abstractify(*phi);
        } else {
            from_json(in, g);
        }
    } catch (const std::exception& e) {
        header["error"] = e.what();
        write_text(opts.output, header.dump() + "\n");
        return kExitInput;
    }

    std::ostringstream out;
    menger::AxiomReport axioms = menger::check_axioms(g);
    if (!axioms.all_pass()) {
        header["diagnosis"] = "axioms fail";
        header["axioms"] = axiom_report_to_json(axioms);
        write_text(opts.output, header.dump() + "\n");
        return kExitFinding;
    }
    if (!g.zero) {
        if (phi) {
            // Zero-free concrete input: St(Phi) = Phi shortcut.
            menger::Subset st = menger::stationary_subset(*phi);
            bool all = menger::subset_count(st) == phi->size();
            header["zero_free_shortcut"] = true;
            header["st_equals_phi"] = all;
            write_text(opts.output, header.dump() + "\n");
            return all ? kExitOk : kExitFinding;
        }
        header["diagnosis"] = "algebra has no zero";
        write_text(opts.output, header.dump() + "\n");
        return kExitFinding;
    }

    out << header.dump() << "\n";
    menger::StationaryAnalyzer an(g);
    auto verdicts = menger::verify_theorem_T5a(an, opts.exhaustive_cap,
                                               menger::kDefaultSampleCount,
                                               opts.seed);
    int mismatches = 0;
    for (const auto& tv : verdicts) {
        ordered_json line = verdict_line(tv);
        if (tv.syntactic.pass && tv.semantic && tv.semantic->pass) {
            line["corollary18"] = menger::to_string(
                menger::check_corollary_18(g, tv.h).verdict);
            auto tp = menger::check_theorem_Tprop(an, tv.h);
            line["derived_properties_ok"] = tp.ok();
            if (!tp.ok()) ++mismatches;
        }
        if (!tv.consistent()) ++mismatches;
        out << line.dump() << "\n";
    }
    write_text(opts.output, out.str());
    return mismatches == 0 ? kExitOk : kExitFinding;
}

int cmd_corpus(const CommonOpts& opts) {
    ordered_json report = report_header("corpus", opts);
    std::vector<menger::ConcreteAlgebra> corpus;
    try {
        corpus = menger::enumerate_closed(opts.m, opts.n, opts.max_members);
    } catch (const menger::CapError& e) {
        report["refusal"] = e.what();
        write_text(opts.output, report.dump(2) + "\n");
        return kExitRefusal;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        write_text(opts.output, report.dump(2) + "\n");
        return kExitInput;
    }

    // Deterministic parallel sweep: fixed per-instance seeds, merge in
    // corpus order regardless of the worker count.
    std::vector<InstanceResult> results(corpus.size());
    int jobs = std::max(opts.jobs, 1);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < corpus.size();
                 i += static_cast<std::size_t>(jobs))
                results[i] = verify_instance(corpus[i], opts.exhaustive_cap,
                                             opts.seed + i);
        });
    for (auto& t : workers) t.join();

    int findings = 0, subsets = 0, zero_bearing = 0;
    ordered_json instances = ordered_json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        results[i].summary["index"] = i;
        findings += results[i].findings;
        subsets += results[i].subsets;
        if (!results[i].summary["zero"].is_null()) ++zero_bearing;
        instances.push_back(std::move(results[i].summary));
    }
    report["instances_total"] = corpus.size();
    report["instances_zero_bearing"] = zero_bearing;
    report["subsets_swept_total"] = subsets;
    report["findings_total"] = findings;
    report["instances"] = std::move(instances);
    write_text(opts.output, report.dump(2) + "\n");

    if (!opts.corpus_output.empty()) {
        nlohmann::json corpus_json = corpus;
        write_text(opts.corpus_output, corpus_json.dump() + "\n");
    }
    return findings == 0 ? kExitOk : kExitFinding;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite workbench for Menger intersection-algebras of "
                 "n-place functions"};
    app.require_subcommand(1);
    CommonOpts opts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opts.input, "input algebra JSON file");
        sub->add_option("--output", opts.output,
                        "report path ('-' or empty for stdout)");
        sub->add_option("--m", opts.m, "base set size");
        sub->add_option("--n", opts.n, "function arity / algebra rank");
        sub->add_option("--max-members", opts.max_members,
                        "closure member cap");
        sub->add_option("--exhaustive-cap", opts.exhaustive_cap,
                        "carrier size up to which subset sweeps are exhaustive");
        sub->add_option("--seed", opts.seed, "sampling seed");
        sub->add_option("--jobs", opts.jobs, "worker thread count");
    };

    CLI::App* check = app.add_subcommand(
        "check-axioms", "verify the semilattice and A1-A10 axioms");
    add_common(check);
    CLI::App* verify = app.add_subcommand(
        "verify", "run the full stationary-subset verification on one algebra");
    add_common(verify);
    CLI::App* corpus = app.add_subcommand(
        "corpus", "enumerate closed algebras and verify every theorem on each");
    add_common(corpus);
    corpus->add_option("--corpus-output", opts.corpus_output,
                       "also write the enumerated corpus as a JSON array");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check_axioms(opts);
        if (verify->parsed()) return cmd_verify(opts);
        if (corpus->parsed()) return cmd_corpus(opts);
    } catch (const menger::CapError& e) {
        std::cerr << "refusal: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
