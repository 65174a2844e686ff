#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "cdlat/bitset.hpp"

using cdlat::Bitset;

namespace {

// deterministic pseudo-random bitsets for property checks
Bitset random_bitset(std::size_t n, std::uint64_t seed) {
    Bitset b(n);
    std::uint64_t s = seed;
    for (std::size_t i = 0; i < n; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        if ((s >> 33) & 1) b.set(i);
    }
    return b;
}

} // namespace

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.test(0));
    CHECK(b.test(64));
    CHECK(b.test(129));
    CHECK_FALSE(b.test(1));
    CHECK(b.count() == 3);
    CHECK(b.elements() == std::vector<int>{0, 64, 129});
    b.reset(64);
    CHECK(b.count() == 2);
    CHECK(b.next_set(0) == 129);
    CHECK(b.next_set(129) == -1);
}

TEST_CASE("bitset full and padding") {
    Bitset f = Bitset::full(70);
    CHECK(f.count() == 70);
    CHECK(f.test(69));
    // padding bits must not leak into equality or counts
    Bitset g(70);
    for (std::size_t i = 0; i < 70; ++i) g.set(i);
    CHECK(f == g);
    CHECK(f.hash() == g.hash());
}

TEST_CASE("set algebra properties") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Bitset a = random_bitset(100, seed);
        Bitset b = random_bitset(100, seed + 1000);
        Bitset c = random_bitset(100, seed + 2000);

        CHECK((a & b) == (b & a));
        CHECK((a | b) == (b | a));
        CHECK(((a & b) & c) == (a & (b & c)));
        CHECK((a & (a | b)) == a); // absorption
        CHECK((a | (a & b)) == a);
        CHECK((a & b).is_subset_of(a));
        CHECK(a.is_subset_of(a | b));
        CHECK((a & b).count() + (a | b).count() == a.count() + b.count());
    }
}

TEST_CASE("canonical order: popcount first, then smallest differing element") {
    Bitset a(10), b(10), c(10);
    a.set(0);
    a.set(1); // {0,1}
    b.set(0);
    b.set(2); // {0,2}
    c.set(3); // {3}
    CHECK(cdlat::canonical_less(c, a)); // smaller order first
    CHECK(cdlat::canonical_less(a, b)); // {0,1} before {0,2}
    CHECK_FALSE(cdlat::canonical_less(b, a));
    CHECK_FALSE(cdlat::canonical_less(a, a));

    // total order: sorting is stable and deterministic
    std::vector<Bitset> v{b, c, a};
    std::sort(v.begin(), v.end(), cdlat::canonical_less);
    CHECK(v[0] == c);
    CHECK(v[1] == a);
    CHECK(v[2] == b);
}

TEST_CASE("for_each visits exactly the set bits in order") {
    Bitset b = random_bitset(200, 7);
    std::vector<int> seen;
    b.for_each([&](int i) { seen.push_back(i); });
    CHECK(seen == b.elements());
}
