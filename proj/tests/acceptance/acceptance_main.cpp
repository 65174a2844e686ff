// Acceptance suite: one criterion per runnable check, each printing a single
// [PASS]/[FAIL] line with its wall-clock time against the stated budget.
// Exit status is the number of failed criteria.
//
//   --criteria fast   criteria 1-6, 8, 9 (default)
//   --criteria 7      the order-3*7^5 stretch run
//   --criteria 10     byte-identical verify output across thread counts
//                     (requires --cdlat PATH)
//   --criteria all    everything
//   --criteria N      a single criterion

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdlat/cd_engine.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/frobenius.hpp"
#include "cdlat/subgroup_ops.hpp"
#include "cdlat/theorem_harness.hpp"

using namespace cdlat;
using nlohmann::json;

namespace {

std::string g_cdlat_path;

bool all_passed(const std::vector<VerificationOutcome>& outcomes, std::string& detail,
                std::size_t min_count = 1) {
    std::size_t failed = 0;
    for (const auto& o : outcomes) {
        if (!o.passed) {
            ++failed;
            if (detail.size() < 2000)
                detail += "\n    failed: " + o.claim_id + " expected=" + o.expected +
                          " actual=" + o.actual;
        }
    }
    detail = std::to_string(outcomes.size()) + " claims, " + std::to_string(failed) + " failed" +
             detail;
    return failed == 0 && outcomes.size() >= min_count;
}

// criterion 1: Corollary 4 over every valid ZM triple with mn <= 200,
// cross-validated against the brute-force oracle
bool criterion1(std::string& detail) {
    return all_passed(suite_corollary4(200, {}), detail, 50);
}

// criterion 2: Theorem 3 instances (>= 8, faithful and non-faithful per A)
bool criterion2(std::string& detail) {
    auto outcomes = suite_theorem3({});
    return all_passed(outcomes, detail, 8);
}

// criterion 3: Theorem 6 over the Frobenius corpus
bool criterion3(std::string& detail) {
    auto outcomes = suite_theorem6({});
    std::set<std::string> want{"theorem6/S3",  "theorem6/D5_order10", "theorem6/D7_order14",
                               "theorem6/F21", "theorem6/F20",        "theorem6/Z11:Z5"};
    std::set<std::string> got;
    for (const auto& o : outcomes) got.insert(o.claim_id);
    if (got != want) {
        detail = "corpus mismatch";
        for (const auto& id : got) detail += " " + id;
        return false;
    }
    return all_passed(outcomes, detail, 6);
}

// criterion 4: Proposition 5 equivalence on Frobenius and non-Frobenius triples
bool criterion4(std::string& detail) {
    auto outcomes = suite_prop5({});
    bool has_nonfrobenius = false;
    for (const auto& o : outcomes)
        if (o.expected.find("false") != std::string::npos) has_nonfrobenius = true;
    if (!has_nonfrobenius) {
        detail = "no non-Frobenius triple in the corpus";
        return false;
    }
    return all_passed(outcomes, detail, 10);
}

// criterion 5: Corollary 2 regular-orbit search on >= 10 faithful instances
bool criterion5(std::string& detail) {
    return all_passed(suite_corollary2({}), detail, 10);
}

// criterion 6: Proposition 7 in both directions, oracle-confirmed at order 243
bool criterion6(std::string& detail) {
    auto outcomes = suite_prop7({});
    bool saw_true = false, saw_false = false;
    for (const auto& o : outcomes) {
        if (o.detail.find("cd_is_singleton_a=true") != std::string::npos) saw_true = true;
        if (o.detail.find("cd_is_singleton_a=false") != std::string::npos) saw_false = true;
    }
    if (!saw_true || !saw_false) {
        detail = "iff not exercised in both directions";
        return false;
    }
    return all_passed(outcomes, detail, 3);
}

// criterion 7: the order-3*7^5 example end to end
bool criterion7(std::string& detail) {
    return all_passed(suite_example_sec3({}), detail, 1);
}

// criterion 8: closure-family and oracle lattices agree on the whole corpus
bool criterion8(std::string& detail) {
    return all_passed(suite_method_equivalence({}), detail, 30);
}

// criterion 9: the lattice property suite over the corpus
bool criterion9(std::string& detail) {
    return all_passed(suite_cd_properties({}), detail, 30);
}

std::string run_capture(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    exit_code = pclose(pipe);
    return out;
}

// criterion 10: cdlat verify emits byte-identical JSON at thread counts 1 and 8
bool criterion10(std::string& detail) {
    if (g_cdlat_path.empty()) {
        detail = "missing --cdlat PATH";
        return false;
    }
    int rc1 = 0, rc8 = 0;
    std::string one = run_capture("'" + g_cdlat_path + "' verify --threads 1", rc1);
    std::string eight = run_capture("'" + g_cdlat_path + "' verify --threads 8", rc8);
    detail = "bytes: " + std::to_string(one.size()) + " vs " + std::to_string(eight.size()) +
             ", exit: " + std::to_string(rc1) + " vs " + std::to_string(rc8);
    if (one.empty()) return false;
    return one == eight && rc1 == 0 && rc8 == 0;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds; // 0 = no stated budget
    std::function<bool(std::string&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "Corollary 4 family check (mn <= 200, oracle-confirmed)", 30, criterion1},
        {2, "Theorem 3 instances (>= 8, oracle-confirmed)", 30, criterion2},
        {3, "Theorem 6 Frobenius corpus", 10, criterion3},
        {4, "Proposition 5 four-condition equivalence", 5, criterion4},
        {5, "Corollary 2 regular-orbit search (>= 10 instances)", 5, criterion5},
        {6, "Proposition 7 both directions (order-243 oracle)", 60, criterion6},
        {7, "Section-3 example: order 3*7^5 stretch", 1800, criterion7},
        {8, "closure-family vs oracle equivalence (corpus <= 200)", 120, criterion8},
        {9, "lattice property suite over the corpus", 60, criterion9},
        {10, "byte-identical verify output across thread counts", 0, criterion10},
    };
    return list;
}

} // namespace

int main(int argc, char** argv) {
    std::string which = "fast";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criteria") == 0 && i + 1 < argc) which = argv[++i];
        if (std::strcmp(argv[i], "--cdlat") == 0 && i + 1 < argc) g_cdlat_path = argv[++i];
    }

    std::set<int> selected;
    if (which == "fast") {
        selected = {1, 2, 3, 4, 5, 6, 8, 9};
    } else if (which == "all") {
        selected = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    } else {
        selected.insert(std::stoi(which));
    }

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!selected.count(c.id)) continue;
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = c.budget_seconds == 0 || elapsed <= c.budget_seconds;
        if (!in_budget) ok = false;
        std::printf("[%s] criterion %d: %s  (%.1fs%s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                    elapsed,
                    c.budget_seconds > 0
                        ? (", budget " + std::to_string(static_cast<int>(c.budget_seconds)) + "s")
                              .c_str()
                        : "");
        if (!detail.empty()) std::printf("       %s\n", detail.c_str());
        if (!ok) ++failures;
        std::fflush(stdout);
    }
    return failures;
}
