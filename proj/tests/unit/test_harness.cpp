#include <doctest.h>

#include <json.hpp>

#include "cdlat/errors.hpp"
#include "cdlat/theorem_harness.hpp"

using namespace cdlat;
using nlohmann::json;

TEST_CASE("verify_corollary4 on the worked triples") {
    // (3,2,2): d = 2, m(G) = 9*4/4 = 9
    VerificationOutcome o = verify_corollary4(3, 2, 2);
    CHECK(o.passed);
    json actual = json::parse(o.actual);
    CHECK(actual["m"] == 9);
    CHECK(actual["cd"].size() == 1);
    CHECK(actual["cd"][0]["order"] == 3);
    CHECK(actual["chain_length"] == 0);

    // (5,4,2): d = 4, m(G) = 25
    o = verify_corollary4(5, 4, 2);
    CHECK(o.passed);
    CHECK(json::parse(o.actual)["m"] == 25);

    // (7,3,2): d = 3, m(G) = 49
    o = verify_corollary4(7, 3, 2);
    CHECK(o.passed);
    CHECK(json::parse(o.actual)["m"] == 49);
}

TEST_CASE("verify_corollary4 degenerate abelian row") {
    VerificationOutcome o = verify_corollary4(3, 2, 1);
    CHECK(o.passed);
    json actual = json::parse(o.actual);
    CHECK(actual["m"] == 36);
    CHECK(actual["cd"][0]["order"] == 6);
}

TEST_CASE("scan_zm(6) contains exactly the nonabelian triple (3,2,2)") {
    auto outcomes = scan_zm(6);
    bool found = false;
    for (const auto& o : outcomes) {
        CHECK(o.passed);
        if (o.claim_id == "corollary4/zm(3,2,2)") found = true;
    }
    CHECK(found);
    // nonabelian rows have r >= 2; (3,2,2) is the only one with mn <= 6
    int nonabelian = 0;
    for (const auto& o : outcomes)
        if (o.claim_id.find(",1)") == std::string::npos) ++nonabelian;
    CHECK(nonabelian == 1);
}

TEST_CASE("verify_theorem3 instances") {
    // faithful: C_B(A) = 1, m = 49, CD = {Z7}
    VerificationOutcome faithful =
        verify_theorem3(GroupSpec::cyclic(7), GroupSpec::cyclic(3), {{{2}}});
    CHECK(faithful.passed);
    json actual = json::parse(faithful.actual);
    CHECK(actual["m"] == 49);
    CHECK(actual["cd"][0]["order"] == 7);

    // trivial action: G abelian, m = 400, CD = {G}
    VerificationOutcome trivial =
        verify_theorem3(GroupSpec::cyclic(5), GroupSpec::cyclic(4), {{{1}}});
    CHECK(trivial.passed);
    json tactual = json::parse(trivial.actual);
    CHECK(tactual["m"] == 400);
    CHECK(tactual["cd"][0]["order"] == 20);

    // order-6 faithful action of Z6 on Z7
    VerificationOutcome z7z6 =
        verify_theorem3(GroupSpec::cyclic(7), GroupSpec::cyclic(6), {{{3}}});
    CHECK(z7z6.passed);
    CHECK(json::parse(z7z6.actual)["m"] == 49);
}

TEST_CASE("theorem3 suite has faithful and non-faithful rows per A and all pass") {
    auto outcomes = suite_theorem3();
    CHECK(outcomes.size() >= 9);
    for (const auto& o : outcomes) {
        INFO(o.claim_id << " expected=" << o.expected << " actual=" << o.actual);
        CHECK(o.passed);
    }
}

TEST_CASE("verify_prop7 in both directions") {
    HarnessConfig cfg;
    {
        Group d8 = dihedral_group(16); // |P : Z| = 8 > 4, so CD = {<r>}
        VerificationOutcome o = verify_prop7(d8, *d8.named_subgroup("rotations"), cfg);
        CHECK(o.passed);
        CHECK(o.detail.find("cd_is_singleton_a=true") != std::string::npos);
    }
    {
        Group d4 = dihedral_group(8); // |P : Z| = 4 = p^2, so CD != {<r>}
        VerificationOutcome o = verify_prop7(d4, *d4.named_subgroup("rotations"), cfg);
        CHECK(o.passed); // the iff still holds: both sides false
        CHECK(o.detail.find("cd_is_singleton_a=false") != std::string::npos);
    }
    {
        Group z4 = cyclic_group(4); // abelian edge: CD = {P} != {A}, index 1
        Bitset a(4);
        a.set(0);
        a.set(2);
        VerificationOutcome o = verify_prop7(z4, a, cfg);
        CHECK(o.passed);
    }
}

TEST_CASE("verify_prop7 validation errors") {
    Group z6 = cyclic_group(6);
    Bitset h = Bitset::full(6);
    CHECK_THROWS_AS(verify_prop7(z6, h, {}), NotPGroup);

    Group d4 = dihedral_group(8);
    Bitset small(8);
    small.set(0);
    small.set(4);
    CHECK_THROWS_AS(verify_prop7(d4, small, {}), NotIndexP); // index 4, not p
}

TEST_CASE("chain classes on the documented corpus subset") {
    std::vector<CorpusEntry> corpus = {
        {"Z6", GroupSpec::cyclic(6), true, false},
        {"S3", GroupSpec::zm(3, 2, 2), true, true},
        {"Q8", GroupSpec::quaternion8(), false, false},
        {"D4", GroupSpec::dihedral(8), false, false},
        {"D5", GroupSpec::dihedral(10), true, true},
        {"F21", GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), {{{2}}}), true,
         true},
    };
    ChainClassSummary summary = verify_cd_chain_classes(corpus);
    REQUIRE(summary.rows.size() == 6);
    auto row = [&](const std::string& name) {
        for (const auto& r : summary.rows)
            if (r.name == name) return r;
        FAIL("missing row " << name);
        return summary.rows[0];
    };
    CHECK(row("Z6").chain_length == 0);
    CHECK(row("S3").chain_length == 0);
    CHECK(row("D5").chain_length == 0);
    CHECK(row("F21").chain_length == 0);
    CHECK_FALSE(row("Q8").is_chain);
    CHECK_FALSE(row("D4").is_chain);
    for (const auto& check : summary.family_checks) CHECK(check.passed);
}

TEST_CASE("suites: theorem6, prop5, corollary2 all pass") {
    for (const auto& o : suite_theorem6()) {
        INFO(o.claim_id << " actual=" << o.actual);
        CHECK(o.passed);
    }
    for (const auto& o : suite_prop5()) {
        INFO(o.claim_id << " actual=" << o.actual);
        CHECK(o.passed);
    }
    auto c2 = suite_corollary2();
    CHECK(c2.size() >= 10);
    for (const auto& o : c2) {
        INFO(o.claim_id);
        CHECK(o.passed);
    }
}

TEST_CASE("run_suite rejects unknown names") {
    CHECK_THROWS_AS(run_suite("nonsense"), InvalidParameters);
}

TEST_CASE("time budget aborts long suites") {
    HarnessConfig cfg;
    cfg.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(scan_zm(200, cfg), TimeBudgetExceeded);
}

TEST_CASE("default corpus builds and is within the id space") {
    const auto& corpus = default_corpus();
    CHECK(corpus.size() >= 40);
    // names unique
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j)
            CHECK(corpus[i].name != corpus[j].name);
}
