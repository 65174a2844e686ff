#include <doctest.h>

#include <algorithm>

#include "cdlat/automorphisms.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"
#include "cdlat/numutil.hpp"
#include "cdlat/subgroup_enum.hpp"
#include "cdlat/subgroup_ops.hpp"

using namespace cdlat;

namespace {

Group zm322() { return zm_group(3, 2, 2); } // isomorphic to S3

std::vector<Group> small_corpus() {
    std::vector<Group> out;
    out.push_back(cyclic_group(6));
    out.push_back(zm322());
    out.push_back(quaternion8_group());
    out.push_back(dihedral_group(8));
    out.push_back(dihedral_group(12));
    out.push_back(symmetric_group(4));
    out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    return out;
}

} // namespace

TEST_CASE("from_cayley_table accepts the trivial group and Z2") {
    Group t = Group::from_cayley_table({{0}});
    CHECK(t.order() == 1);
    CHECK(t.mul(0, 0) == 0);

    Group z2 = Group::from_cayley_table({{0, 1}, {1, 0}});
    CHECK(z2.order() == 2);
    CHECK(z2.inv(1) == 1);
}

TEST_CASE("from_cayley_table relocates the identity to id 0") {
    // Z3 written with the identity at position 2
    // elements {a, a^2, e}: table[i][j] under that labeling
    std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    Group g = Group::from_cayley_table(t);
    CHECK(g.order() == 3);
    CHECK(g.mul(0, 1) == 1);
    CHECK(g.mul(0, 2) == 2);
    CHECK(g.order_of(1) == 3);
}

TEST_CASE("from_cayley_table rejects non-groups with a witness") {
    // not a Latin square: row repeats a value
    CHECK_THROWS_AS(Group::from_cayley_table({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), NotAGroup);
    // Latin square with identity but broken associativity (order-5 quasigroup)
    std::vector<std::vector<int>> q = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    CHECK_THROWS_WITH_AS(Group::from_cayley_table(q), doctest::Contains("associativity"),
                         NotAGroup);
    // no identity at all
    CHECK_THROWS_AS(Group::from_cayley_table({{1, 0}, {0, 1}}), NotAGroup);
}

TEST_CASE("closure examples") {
    Group z6 = cyclic_group(6);
    CHECK(closure(z6, {}).elements() == std::vector<int>{0});
    CHECK(closure(z6, {2}).elements() == std::vector<int>{0, 2, 4});

    Group s3 = zm322();
    int a = s3.element_by_label("a");
    REQUIRE(a >= 0);
    Bitset h = closure(s3, {a});
    CHECK(h.count() == 3);
}

TEST_CASE("centralizer examples and route agreement") {
    Group s3 = zm322();
    Bitset whole = Bitset::full(6);

    Bitset id_only(6);
    id_only.set(0);
    CHECK(centralizer(s3, id_only) == whole);
    CHECK(centralizer(s3, whole) == center(s3));

    int a = s3.element_by_label("a");
    Bitset ha = closure(s3, {a});
    Bitset c = centralizer(s3, ha);
    CHECK(c == ha); // <a> is self-centralizing in S3
    CHECK(c.count() == 3);

    // optimization equals the definitional scan on every subgroup of a corpus
    for (const Group& g : small_corpus()) {
        for (const Bitset& h : all_subgroups(g).subgroups)
            CHECK(centralizer(g, h) == centralizer_scan(g, h));
    }
}

TEST_CASE("center examples") {
    Group z6 = cyclic_group(6);
    CHECK(center(z6).count() == 6);

    CHECK(center(zm_group(5, 4, 2)).count() == 1); // d = 4 = n

    Group d5 = dihedral_group(10);
    CHECK(center(d5).count() == 1);

    Group q8 = quaternion8_group();
    CHECK(center(q8) == *q8.named_subgroup("center"));
}

TEST_CASE("is_normal examples") {
    Group s3 = zm322();
    Bitset trivial(6);
    trivial.set(0);
    CHECK(is_normal(s3, trivial));
    CHECK(is_normal(s3, closure(s3, {s3.element_by_label("a")})));
    CHECK_FALSE(is_normal(s3, closure(s3, {s3.element_by_label("b")})));
}

TEST_CASE("nilpotency via upper central series, against the Sylow oracle") {
    CHECK(is_nilpotent(cyclic_group(12)));
    CHECK_FALSE(is_nilpotent(zm322()));
    CHECK(is_nilpotent(heisenberg_gf(3)));

    // oracle: nilpotent iff every Sylow subgroup is normal
    for (const Group& g : small_corpus()) {
        auto inventory = all_subgroups(g).subgroups;
        bool sylows_normal = true;
        for (auto [p, e] : factorize(g.order())) {
            long long pk = 1;
            for (int i = 0; i < e; ++i) pk *= p;
            for (const Bitset& h : inventory)
                if (static_cast<long long>(h.count()) == pk && !is_normal(g, h))
                    sylows_normal = false;
        }
        CHECK(is_nilpotent(g) == sylows_normal);
    }
}

TEST_CASE("triple-centralizer identity and antitone property") {
    for (const Group& g : small_corpus()) {
        auto subgroups = all_subgroups(g).subgroups;
        for (const Bitset& h : subgroups) {
            Bitset c1 = centralizer(g, h);
            CHECK(centralizer(g, centralizer(g, c1)) == c1);
        }
        for (const Bitset& h : subgroups)
            for (const Bitset& k : subgroups)
                if (h.is_subset_of(k))
                    CHECK(centralizer(g, k).is_subset_of(centralizer(g, h)));
    }
}

TEST_CASE("subgroup_as_group restricts the table faithfully") {
    Group s4 = symmetric_group(4);
    for (const Bitset& h : all_subgroups(s4).subgroups) {
        SubgroupAsGroup sub = subgroup_as_group(s4, h);
        CHECK(sub.group.order() == static_cast<int>(h.count()));
        sub.group.validate(); // full axiom check at this size
        for (int i = 0; i < sub.group.order(); ++i)
            for (int j = 0; j < sub.group.order(); ++j)
                CHECK(sub.embedding[static_cast<std::size_t>(sub.group.mul(i, j))] ==
                      s4.mul(sub.embedding[static_cast<std::size_t>(i)],
                             sub.embedding[static_cast<std::size_t>(j)]));
    }

    Bitset not_closed(24);
    not_closed.set(0);
    not_closed.set(1);
    not_closed.set(5);
    CHECK_THROWS_AS(subgroup_as_group(s4, not_closed), NotAGroup);
}

TEST_CASE("automorphism counts for small groups") {
    CHECK(automorphisms_small(cyclic_group(2)).size() == 1);
    CHECK(automorphisms_small(cyclic_group(3)).size() == 2);
    CHECK(automorphisms_small(zm322()).size() == 6);       // Aut(S3) = S3
    CHECK(automorphisms_small(cyclic_group(12)).size() == 4); // phi(12)
    Group v4 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(automorphisms_small(v4).size() == 6); // GL(2,2)
}

TEST_CASE("automorphisms are composition-closed bijective homomorphisms") {
    std::vector<Group> groups;
    groups.push_back(zm322());
    groups.push_back(quaternion8_group());
    for (const Group& g : groups) {
        auto auts = automorphisms_small(g);
        int n = g.order();

        std::vector<int> identity(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
        CHECK(std::find(auts.begin(), auts.end(), identity) != auts.end());

        for (const auto& phi : auts) {
            std::vector<char> hit(static_cast<std::size_t>(n), 0);
            for (int x = 0; x < n; ++x) {
                CHECK_FALSE(hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])]);
                hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])] = 1;
            }
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    CHECK(phi[static_cast<std::size_t>(g.mul(x, y))] ==
                          g.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]));
        }

        // closure under composition
        for (std::size_t i = 0; i < auts.size(); ++i)
            for (std::size_t j = 0; j < auts.size(); ++j) {
                std::vector<int> comp(static_cast<std::size_t>(n));
                for (int x = 0; x < n; ++x)
                    comp[static_cast<std::size_t>(x)] =
                        auts[i][static_cast<std::size_t>(auts[j][static_cast<std::size_t>(x)])];
                CHECK(std::find(auts.begin(), auts.end(), comp) != auts.end());
            }
    }
}

TEST_CASE("automorphism size guard") {
    AutLimits tight;
    tight.max_order = 4;
    CHECK_THROWS_AS(automorphisms_small(cyclic_group(6), tight), SizeGuard);
}

TEST_CASE("is_characteristic examples") {
    Group s3 = zm322();
    CHECK(is_characteristic(s3, center(s3)) == Ternary::True);
    CHECK(is_characteristic(s3, closure(s3, {s3.element_by_label("a")})) == Ternary::True);

    Group v4 = direct_product(cyclic_group(2), cyclic_group(2));
    Bitset one_factor = *v4.named_subgroup("left_factor");
    CHECK(is_characteristic(v4, one_factor) == Ternary::False);

    AutLimits tight;
    tight.max_order = 4;
    CHECK(is_characteristic(s3, center(s3), tight) == Ternary::Unknown);
}

TEST_CASE("order_of and inverses") {
    Group q8 = quaternion8_group();
    CHECK(q8.order_of(0) == 1);
    int minus_one = q8.element_by_label("-1");
    CHECK(q8.order_of(minus_one) == 2);
    int involutions = 0;
    for (int x = 1; x < 8; ++x)
        if (q8.order_of(x) == 2) ++involutions;
    CHECK(involutions == 1); // exactly one involution in the quaternion group
    for (int x = 0; x < 8; ++x) CHECK(q8.mul(x, q8.inv(x)) == 0);
}
