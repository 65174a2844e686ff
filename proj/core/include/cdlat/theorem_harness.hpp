#ifndef CDLAT_THEOREM_HARNESS_HPP
#define CDLAT_THEOREM_HARNESS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/cd_engine.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/group.hpp"
#include "cdlat/group_spec.hpp"

namespace cdlat {

/// One mechanically checked claim instance. `passed` holds exactly when the
/// structured expectation equals the computed value (integer and set
/// equality, no tolerances); expected/actual are their canonical JSON
/// renderings, detail is free-form and not compared.
struct VerificationOutcome {
    std::string claim_id;
    std::string instance;
    std::string expected;
    std::string actual;
    bool passed = false;
    std::int64_t runtime_ms = 0;
    std::string detail;
};

struct HarnessConfig {
    CdLimits limits;
    bool with_oracle = true; // cross-validate against brute force when in bounds
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Builds G = A x| B and checks m(G) = |A|^2 |C_B(A)|^2 with the lattice
/// equal to { A C_B(A) } exactly; oracle-confirmed when within bounds.
VerificationOutcome verify_theorem3(const GroupSpec& a_spec, const GroupSpec& b_spec,
                                    const ActionSpec& action, const HarnessConfig& cfg = {});

/// ZM family formula: m(G) = m^2 n^2 / d^2 and lattice { <a, b^d> } with d the
/// multiplicative order of r mod m. r == 1 is routed to the abelian path
/// (direct product of the two cyclic factors).
VerificationOutcome verify_corollary4(long long m, long long n, long long r,
                                      const HarnessConfig& cfg = {});

/// p-group with abelian A of index p: the lattice is {A} iff |P : Z(P)| > p^2;
/// both directions evaluated independently, plus the self-centralizing facts
/// when P is nonabelian.
VerificationOutcome verify_prop7(const Group& p, const Bitset& a, const HarnessConfig& cfg = {});

/// The order-3*7^5 Frobenius construction end to end (stretch workload).
VerificationOutcome verify_example_sec3(const HarnessConfig& cfg = {});

/// All valid (m, n, r) with m*n <= bound, plus the degenerate abelian rows.
std::vector<VerificationOutcome> scan_zm(long long bound, const HarnessConfig& cfg = {});

// ---------------------------------------------------------------------------

struct CorpusEntry {
    std::string name;
    GroupSpec spec;
    bool theorem3_product = false;        // abelian-by-abelian coprime with normal part
    bool frobenius_abelian_kernel = false;
};

/// The standard small-group test corpus (orders up to a few hundred).
const std::vector<CorpusEntry>& default_corpus();

struct ChainClassRow {
    std::string name;
    std::string spec_json;
    long long order = 0;
    std::int64_t max_measure = 0;
    std::size_t member_count = 0;
    bool is_chain = false;
    int chain_length = -1;
    bool theorem3_product = false;
    bool frobenius_abelian_kernel = false;
    bool skipped = false;
    std::string skip_reason;
};

struct ChainClassSummary {
    std::vector<ChainClassRow> rows;
    std::vector<VerificationOutcome> family_checks;
};

/// Census of which corpus members have a one-element lattice, cross-checked
/// against the two families that guarantee it.
ChainClassSummary verify_cd_chain_classes(const std::vector<CorpusEntry>& corpus,
                                          const HarnessConfig& cfg = {});

// -- suites -----------------------------------------------------------------

std::vector<VerificationOutcome> suite_corollary4(long long bound, const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_theorem3(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_theorem6(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_prop5(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_corollary2(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_prop7(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_method_equivalence(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_cd_properties(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_chain_classes(const HarnessConfig& cfg = {});
std::vector<VerificationOutcome> suite_example_sec3(const HarnessConfig& cfg = {});

/// Fast suites in fixed order (everything except the stretch example).
std::vector<std::string> fast_suite_names();
std::vector<VerificationOutcome> run_suite(const std::string& name, const HarnessConfig& cfg = {});

/// Machine-readable outcome list; runtime fields zeroed unless `timings`.
std::string outcomes_to_json(const std::vector<VerificationOutcome>& outcomes,
                             bool timings = false, int indent = 2);

} // namespace cdlat

#endif
