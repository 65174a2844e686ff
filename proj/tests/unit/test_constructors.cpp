#include <doctest.h>

#include <memory>

#include "cdlat/constructors.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/numutil.hpp"
#include "cdlat/subgroup_ops.hpp"

using namespace cdlat;

TEST_CASE("cyclic groups") {
    Group t = cyclic_group(1);
    CHECK(t.order() == 1);
    Group z6 = cyclic_group(6);
    CHECK(z6.order() == 6);
    CHECK(z6.is_abelian());
    CHECK(z6.order_of(1) == 6);
    CHECK_THROWS_AS(cyclic_group(0), InvalidParameters);
}

TEST_CASE("dihedral groups") {
    Group d5 = dihedral_group(10);
    CHECK(d5.order() == 10);
    CHECK_FALSE(d5.is_abelian());
    CHECK(center(d5).count() == 1);
    CHECK(d5.named_subgroup("rotations")->count() == 5);
    CHECK_THROWS_AS(dihedral_group(7), InvalidParameters);
    CHECK_THROWS_AS(dihedral_group(2), InvalidParameters);
}

TEST_CASE("quaternion8") {
    Group q8 = quaternion8_group();
    CHECK(q8.order() == 8);
    CHECK(center(q8).count() == 2);
    int i = q8.element_by_label("i"), j = q8.element_by_label("j"),
        k = q8.element_by_label("k"), m1 = q8.element_by_label("-1");
    CHECK(q8.mul(i, i) == m1);
    CHECK(q8.mul(i, j) == k);
    CHECK(q8.mul(j, i) == q8.element_by_label("-k"));
}

TEST_CASE("symmetric groups") {
    CHECK(symmetric_group(1).order() == 1);
    CHECK(symmetric_group(3).order() == 6);
    CHECK(symmetric_group(5).order() == 120);
    CHECK_FALSE(symmetric_group(4).is_abelian());
    CHECK_THROWS_AS(symmetric_group(6), SizeGuard);
}

TEST_CASE("every constructor output passes full validation") {
    std::vector<Group> groups;
    groups.push_back(cyclic_group(12));
    groups.push_back(dihedral_group(16));
    groups.push_back(quaternion8_group());
    groups.push_back(symmetric_group(4));
    groups.push_back(zm_group(5, 4, 2));
    groups.push_back(direct_product(cyclic_group(3), quaternion8_group()));
    groups.push_back(heisenberg_gf(3));
    groups.push_back(build_group(GroupSpec::scalar_ext(3, 2)));
    for (const Group& g : groups) g.validate(); // throws on any axiom failure
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(1, 5) == 1);
    CHECK(multiplicative_order(2, 3) == 2);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK_THROWS_AS(multiplicative_order(6, 9), NotCoprime);
}

TEST_CASE("zm_group examples") {
    Group s3 = zm_group(3, 2, 2);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(center(s3).count() == 1);

    Group g = zm_group(5, 4, 2);
    CHECK(g.order() == 20);
    CHECK(center(g).count() == 1);

    CHECK_THROWS_WITH_AS(zm_group(4, 2, 3), doctest::Contains("gcd(m, r-1) != 1"),
                         InvalidZMParameters);
    CHECK_THROWS_WITH_AS(zm_group(9, 3, 4), doctest::Contains("gcd(m, n) != 1"),
                         InvalidZMParameters);
    CHECK_THROWS_WITH_AS(zm_group(7, 2, 3), doctest::Contains("r^n != 1"), InvalidZMParameters);

    // the defining relation b^-1 a b = a^r holds in the constructed table
    for (auto [m, n, r] : {std::tuple<long long, long long, long long>{3, 2, 2},
                           {5, 4, 2},
                           {7, 3, 2},
                           {7, 6, 3},
                           {13, 4, 5}}) {
        Group zm = zm_group(m, n, r);
        int a = zm.element_by_label("a"), b = zm.element_by_label("b");
        int lhs = zm.mul(zm.mul(zm.inv(b), a), b);
        int ar = 0;
        for (long long i = 0; i < r; ++i) ar = zm.mul(ar, a);
        CHECK(lhs == ar);
        CHECK(zm.order_of(a) == m);
        CHECK(zm.order_of(b) == n);
    }
}

TEST_CASE("zm center equals the subgroup generated by b^d") {
    for (long long m = 2; m <= 40; ++m)
        for (long long n = 2; m * n <= 60; ++n) {
            if (gcd_ll(m, n) != 1) continue;
            for (long long r = 2; r < m; ++r) {
                if (gcd_ll(m, r - 1) != 1 || pow_mod(r, n, m) != 1) continue;
                Group g = zm_group(m, n, r);
                long long d = multiplicative_order(r, m);
                int bd = static_cast<int>(d % n); // id of b^d in the (i,j) layout
                CHECK(center(g) == closure(g, {bd}));
            }
        }
}

TEST_CASE("semidirect product: trivial action gives the direct product") {
    Group a = cyclic_group(5), b = cyclic_group(4);
    Group sd = semidirect_product(a, b, {{{1}}});
    Group dp = direct_product(a, b);
    CHECK(sd.order() == 20);
    for (int x = 0; x < 20; ++x)
        for (int y = 0; y < 20; ++y) CHECK(sd.mul(x, y) == dp.mul(x, y));
    CHECK(sd.is_abelian());
}

TEST_CASE("semidirect product embeds A normally with B as a complement") {
    Group g = semidirect_product(cyclic_group(7), cyclic_group(3), {{{2}}});
    CHECK(g.order() == 21);
    const Bitset& n = *g.named_subgroup("normal_part");
    const Bitset& c = *g.named_subgroup("complement_part");
    CHECK(is_normal(g, n));
    CHECK((n & c).count() == 1);
    CHECK(n.count() * c.count() == 21);
    Bitset product = closure_extend(g, n, c.elements());
    CHECK(product.count() == 21);
}

TEST_CASE("semidirect product validation errors") {
    CHECK_THROWS_AS(semidirect_product(cyclic_group(4), cyclic_group(2), {{{1}}}),
                    NotCoprimeOrders);
    CHECK_THROWS_AS(semidirect_product(quaternion8_group(), cyclic_group(3), {{{1, 2}}}),
                    NotAbelian);
    // constant map x -> e is not an automorphism
    CHECK_THROWS_AS(semidirect_product(cyclic_group(5), cyclic_group(2), {{{0}}}), InvalidAction);
    // x -> x^2 has order 4 on Z5; it cannot come from a generator of Z2
    CHECK_THROWS_AS(semidirect_product(cyclic_group(5), cyclic_group(2), {{{2}}}), InvalidAction);
    // wrong arity
    CHECK_THROWS_AS(semidirect_product(cyclic_group(5), cyclic_group(2), {{{4, 1}}}),
                    InvalidAction);
}

TEST_CASE("heisenberg_gf(3): order, center, abelian plane") {
    Group p = heisenberg_gf(3);
    CHECK(p.order() == 243);
    CHECK_FALSE(p.is_abelian());

    Bitset z = center(p);
    CHECK(z.count() == 9);
    CHECK(z == *p.named_subgroup("center"));

    const Bitset& plane = *p.named_subgroup("abelian_plane");
    CHECK(plane.count() == 81);
    CHECK(is_abelian_subset(p, plane));
    CHECK(centralizer(p, plane) == plane);
    CHECK(is_nilpotent(p));

    CHECK_THROWS_AS(heisenberg_gf(4), InvalidParameters);
    CHECK_THROWS_AS(heisenberg_gf(11), SizeGuard); // 11^5 exceeds the id space
}

TEST_CASE("scalar extension at p=3: lambda=2 squares to 1, so not fixed-point free") {
    auto p = std::make_shared<const Group>(heisenberg_gf(3));
    Group g = scalar_automorphism_extension(p, 2);
    CHECK(g.order() == 486);
    CHECK_FALSE(scalar_ext_fixed_point_free(g)); // lambda^2 = 4 = 1 (mod 3)
    CHECK(g.attribute("extension_exponent") == 2);

    const Bitset& kernel = *g.named_subgroup("kernel");
    CHECK(kernel.count() == 243);
    CHECK(is_normal(g, kernel));

    // conjugation by x acts exactly as (a,b,c) -> (2a, 4b, 2c); at p=3 the
    // middle entry is fixed since 4 = 1 (mod 3)
    int x = 1; // (identity of P, k=1)
    std::vector<int> kern = kernel.elements();
    auto scale2 = [](int idx) { // doubles both coefficients of a GF(9) index
        int c0 = idx / 3, c1 = idx % 3;
        return (2 * c0 % 3) * 3 + (2 * c1 % 3);
    };
    for (int q = 0; q < p->order(); ++q) {
        int embedded = kern[static_cast<std::size_t>(q)];
        int conj = g.conj(x, embedded);
        // q = (a_idx * 9 + b_idx) * 3 + c in the coefficient-lex layout
        int a_idx = q / 27, b_idx = q / 3 % 9, c = q % 3;
        int image_q = (scale2(a_idx) * 9 + b_idx) * 3 + (2 * c % 3);
        CHECK(conj == kern[static_cast<std::size_t>(image_q)]);
    }

    CHECK_THROWS_AS(scalar_automorphism_extension(p, 1), InvalidLambda);
    CHECK_THROWS_AS(scalar_automorphism_extension(p, 3), InvalidLambda);
    CHECK_THROWS_AS(scalar_automorphism_extension(std::make_shared<const Group>(cyclic_group(5)), 2),
                    InvalidParameters);
}

TEST_CASE("direct product orders and labels") {
    Group g = direct_product(cyclic_group(3), cyclic_group(4));
    CHECK(g.order() == 12);
    CHECK(g.is_abelian());
    CHECK(g.named_subgroup("left_factor")->count() == 3);
    CHECK(g.named_subgroup("right_factor")->count() == 4);
    CHECK(g.label(0) == "e");
}

TEST_CASE("build_group dispatches every family") {
    CHECK(build_group(GroupSpec::cyclic(7)).order() == 7);
    CHECK(build_group(GroupSpec::dihedral(14)).order() == 14);
    CHECK(build_group(GroupSpec::quaternion8()).order() == 8);
    CHECK(build_group(GroupSpec::symmetric(4)).order() == 24);
    CHECK(build_group(GroupSpec::zm(7, 3, 2)).order() == 21);
    CHECK(build_group(GroupSpec::heisenberg_gf(3)).order() == 243);
    CHECK(build_group(GroupSpec::scalar_ext(3, 2)).order() == 486);
    CHECK(build_group(GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::cyclic(3)))
              .order() == 6);
    CHECK(build_group(GroupSpec::semidirect(GroupSpec::cyclic(5), GroupSpec::cyclic(4), {{{2}}}))
              .order() == 20);
}
