#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cdlat/cd_engine.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/report_io.hpp"
#include "cdlat/subgroup_ops.hpp"
#include "cdlat/theorem_harness.hpp"

namespace {

using cdlat::CdLimits;
using cdlat::CdMethod;
using cdlat::Group;
using cdlat::GroupSpec;
using cdlat::HarnessConfig;
using nlohmann::json;

struct CommonOpts {
    std::string spec_path;
    std::string inline_spec;
    std::string method = "closure";
    std::string format = "json";
    int order_bound = 200;
    std::size_t count_bound = 100000;
    std::size_t family_bound = 200000;
    int threads = 1;
    long long time_budget = 0; // seconds; 0 = none
    std::size_t elements_bound = 512;
    bool timings = false;
};

void add_guard_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--order-bound", opts.order_bound,
                    "Max group order for exhaustive subgroup enumeration");
    cmd->add_option("--count-bound", opts.count_bound, "Max enumerated subgroup count");
    cmd->add_option("--family-bound", opts.family_bound, "Max centralizer-closure family size");
    cmd->add_option("--threads", opts.threads, "Worker threads (1 = sequential)");
    cmd->add_option("--time-budget", opts.time_budget, "Wall-clock budget in seconds");
    cmd->add_flag("--timings", opts.timings,
                  "Emit real runtime_ms fields (breaks byte-stable output)");
}

void add_spec_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--spec", opts.spec_path, "Path to a group spec JSON file");
    cmd->add_option("--inline", opts.inline_spec, "Group spec JSON given inline");
}

CdLimits limits_from(const CommonOpts& opts) {
    CdLimits limits;
    limits.enum_limits.order_bound = opts.order_bound;
    limits.enum_limits.count_bound = opts.count_bound;
    limits.enum_limits.threads = opts.threads;
    limits.family_bound = opts.family_bound;
    limits.threads = opts.threads;
    return limits;
}

HarnessConfig harness_config(const CommonOpts& opts) {
    HarnessConfig cfg;
    cfg.limits = limits_from(opts);
    if (opts.time_budget > 0)
        cfg.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(opts.time_budget);
    return cfg;
}

GroupSpec load_spec(const CommonOpts& opts) {
    if (!opts.spec_path.empty() && !opts.inline_spec.empty())
        throw cdlat::SpecError("--spec and --inline are mutually exclusive");
    if (!opts.inline_spec.empty()) return cdlat::group_spec_from_json_text(opts.inline_spec);
    if (opts.spec_path.empty()) throw cdlat::SpecError("one of --spec or --inline is required");
    std::ifstream in(opts.spec_path);
    if (!in) throw cdlat::SpecError("cannot read spec file \"" + opts.spec_path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return cdlat::group_spec_from_json_text(buf.str());
}

CdMethod method_from(const std::string& name) {
    if (name == "closure") return CdMethod::closure_family;
    if (name == "oracle") return CdMethod::brute_force;
    throw cdlat::SpecError("unknown method \"" + name + "\" (expected oracle|closure)");
}

int cmd_construct(const CommonOpts& opts, bool dump_table) {
    Group g = cdlat::build_group(load_spec(opts));
    cdlat::ReportRenderOptions render;
    render.elements_bound = opts.elements_bound;
    render.timings = opts.timings;
    if (opts.format == "text") {
        std::cout << cdlat::group_summary_text(g);
    } else {
        std::cout << cdlat::group_summary_json(g, render) << "\n";
    }
    if (dump_table) {
        if (g.order() > 1024)
            throw cdlat::SizeGuard("table dump limited to order <= 1024");
        json rows = json::array();
        for (int a = 0; a < g.order(); ++a) {
            json row = json::array();
            for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
    }
    return 0;
}

int cmd_cd(const CommonOpts& opts) {
    Group g = cdlat::build_group(load_spec(opts));
    cdlat::CDReport report = cdlat::cd_lattice(g, method_from(opts.method), limits_from(opts));
    cdlat::ReportRenderOptions render;
    render.elements_bound = opts.elements_bound;
    render.timings = opts.timings;
    if (opts.format == "dot")
        std::cout << cdlat::cd_report_to_dot(g, report);
    else if (opts.format == "text")
        std::cout << cdlat::cd_report_to_text(g, report);
    else
        std::cout << cdlat::cd_report_to_json(g, report, render) << "\n";
    return 0;
}

int emit_outcomes(const std::vector<cdlat::VerificationOutcome>& outcomes,
                  const CommonOpts& opts) {
    std::size_t failed = 0;
    for (const auto& o : outcomes)
        if (!o.passed) ++failed;
    if (opts.format == "text") {
        for (const auto& o : outcomes)
            std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << o.claim_id
                      << (o.detail.empty() ? "" : "  (" + o.detail + ")") << "\n";
        std::cout << outcomes.size() << " claims, " << failed << " failed\n";
    } else {
        std::cout << cdlat::outcomes_to_json(outcomes, opts.timings) << "\n";
    }
    std::cerr << "cdlat: " << outcomes.size() << " claims checked, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_verify(const CommonOpts& opts, std::vector<std::string> suites, long long bound) {
    if (suites.empty()) suites = {"all"};
    std::vector<std::string> expanded;
    for (const std::string& s : suites) {
        if (s == "all") {
            auto fast = cdlat::fast_suite_names();
            expanded.insert(expanded.end(), fast.begin(), fast.end());
        } else {
            expanded.push_back(s);
        }
    }
    HarnessConfig cfg = harness_config(opts);
    std::vector<cdlat::VerificationOutcome> outcomes;
    for (const std::string& name : expanded) {
        std::vector<cdlat::VerificationOutcome> got =
            name == "corollary4" ? cdlat::suite_corollary4(bound, cfg) : cdlat::run_suite(name, cfg);
        outcomes.insert(outcomes.end(), got.begin(), got.end());
    }
    std::sort(outcomes.begin(), outcomes.end(),
              [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
    return emit_outcomes(outcomes, opts);
}

json row_json(const cdlat::ChainClassRow& row) {
    json j;
    j["name"] = row.name;
    j["spec"] = json::parse(row.spec_json);
    j["order"] = row.order;
    if (row.skipped) {
        j["skipped"] = true;
        j["skip_reason"] = row.skip_reason;
        return j;
    }
    j["m"] = row.max_measure;
    j["members"] = row.member_count;
    j["is_chain"] = row.is_chain;
    if (row.chain_length >= 0) j["chain_length"] = row.chain_length;
    return j;
}

void print_rows_text(const std::vector<cdlat::ChainClassRow>& rows) {
    for (const auto& row : rows) {
        std::cout << row.name << "  order=" << row.order;
        if (row.skipped) {
            std::cout << "  SKIPPED (" << row.skip_reason << ")\n";
            continue;
        }
        std::cout << "  m=" << row.max_measure << "  members=" << row.member_count
                  << "  chain=" << (row.is_chain ? "yes" : "no");
        if (row.chain_length >= 0) std::cout << "  length=" << row.chain_length;
        std::cout << "\n";
    }
}

int cmd_scan(const CommonOpts& opts, const std::string& family, long long bound) {
    HarnessConfig cfg = harness_config(opts);
    if (family == "zm") {
        auto outcomes = cdlat::scan_zm(bound, cfg);
        return emit_outcomes(outcomes, opts);
    }
    std::vector<cdlat::ChainClassRow> rows;
    if (family == "dihedral") {
        std::vector<cdlat::CorpusEntry> entries;
        for (long long order = 4; order <= bound; order += 2)
            entries.push_back({"D" + std::to_string(order / 2) + "_order" + std::to_string(order),
                               GroupSpec::dihedral(order), false, false});
        rows = cdlat::verify_cd_chain_classes(entries, cfg).rows;
    } else if (family == "corpus") {
        rows = cdlat::verify_cd_chain_classes(cdlat::default_corpus(), cfg).rows;
    } else {
        throw cdlat::SpecError("unknown scan family \"" + family +
                               "\" (expected zm|dihedral|corpus)");
    }
    if (opts.format == "text") {
        print_rows_text(rows);
    } else {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(row_json(row));
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chermak-Delgado measures and lattices for finite groups"};
    app.require_subcommand(1);

    CommonOpts construct_opts, cd_opts, verify_opts, scan_opts, sec3_opts;
    bool dump_table = false;
    std::vector<std::string> suites;
    long long verify_bound = 200;
    std::string scan_family;
    long long scan_bound = 30;

    CLI::App* construct = app.add_subcommand("construct", "Build a group from a spec and summarize it");
    add_spec_options(construct, construct_opts);
    construct->add_option("--format", construct_opts.format, "json|text");
    construct->add_option("--elements-bound", construct_opts.elements_bound,
                          "Label table emitted only below this order");
    construct->add_flag("--dump-table", dump_table, "Also dump the full multiplication table");

    CLI::App* cd = app.add_subcommand("cd", "Compute the Chermak-Delgado lattice");
    add_spec_options(cd, cd_opts);
    cd->add_option("--method", cd_opts.method, "oracle|closure");
    cd->add_option("--format", cd_opts.format, "json|dot|text");
    cd->add_option("--elements-bound", cd_opts.elements_bound,
                   "Member element lists emitted only below this order");
    add_guard_options(cd, cd_opts);

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suites, "Suite name (repeatable); default: all fast suites");
    verify->add_option("--bound", verify_bound, "Order bound for the ZM family scan");
    verify->add_option("--format", verify_opts.format, "json|text");
    add_guard_options(verify, verify_opts);

    CLI::App* scan = app.add_subcommand("scan", "Family census: measure, lattice size, chain shape");
    scan->add_option("family", scan_family, "zm|dihedral|corpus")->required();
    scan->add_option("--bound", scan_bound, "Max group order for the family scan");
    scan->add_option("--format", scan_opts.format, "json|text");
    add_guard_options(scan, scan_opts);

    CLI::App* sec3 = app.add_subcommand("example-sec3",
                                        "Run the order-3*7^5 Frobenius stretch verification");
    sec3->add_option("--format", sec3_opts.format, "json|text");
    add_guard_options(sec3, sec3_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(construct_opts, dump_table);
        if (cd->parsed()) return cmd_cd(cd_opts);
        if (verify->parsed()) return cmd_verify(verify_opts, suites, verify_bound);
        if (scan->parsed()) return cmd_scan(scan_opts, scan_family, scan_bound);
        if (sec3->parsed()) {
            auto outcomes = cdlat::suite_example_sec3(harness_config(sec3_opts));
            return emit_outcomes(outcomes, sec3_opts);
        }
    } catch (const cdlat::SizeGuard& e) {
        std::cerr << "cdlat: error: " << e.what() << "\n";
        return 3;
    } catch (const cdlat::TimeBudgetExceeded& e) {
        std::cerr << "cdlat: error: " << e.what() << "\n";
        return 3;
    } catch (const cdlat::Error& e) {
        std::cerr << "cdlat: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cdlat: error: internal: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
