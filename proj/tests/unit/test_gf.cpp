#include <doctest.h>

#include "cdlat/errors.hpp"
#include "cdlat/gf.hpp"

using namespace cdlat::gf;

TEST_CASE("GF(7) arithmetic") {
    Fp f(7);
    CHECK(f.add(3, 5) == 1);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.neg(0) == 0);
    CHECK(f.neg(2) == 5);
    CHECK_THROWS_AS(f.inv(0), cdlat::DivisionByZero);
    CHECK_THROWS_AS(Fp(8), cdlat::InvalidParameters);
    CHECK_THROWS_AS(Fp(2), cdlat::InvalidParameters);
}

TEST_CASE("smallest quadratic non-residue") {
    CHECK(smallest_nonresidue(3) == 2);
    CHECK(smallest_nonresidue(5) == 2);
    CHECK(smallest_nonresidue(7) == 3); // squares mod 7 are {1, 2, 4}
    CHECK(smallest_nonresidue(11) == 2);
}

TEST_CASE("GF(49) with modulus t^2 - 3") {
    Fp2Field f(7);
    CHECK(f.kappa() == 3);
    Fp2 t = f.t();
    CHECK(f.mul(t, t) == f.embed(3)); // t*t reduces to kappa
    CHECK(f.add(Fp2{3, 2}, Fp2{5, 6}) == Fp2{1, 1});
    // GF(7) embeds on the c1 = 0 axis
    CHECK(f.mul(f.embed(3), f.embed(5)) == f.embed(1));
}

TEST_CASE("field axioms over all of GF(25) and GF(49)") {
    for (int p : {5, 7}) {
        Fp2Field f(p);
        int q = p * p;
        for (int x = 0; x < q; ++x) {
            Fp2 a = f.from_index(x);
            CHECK(f.to_index(a) == x);
            CHECK(f.add(a, f.neg(a)) == Fp2{0, 0});
            if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == Fp2{1, 0});
        }
        // associativity and distributivity on a grid of triples
        for (int x = 0; x < q; x += 3)
            for (int y = 1; y < q; y += 4)
                for (int z = 2; z < q; z += 5) {
                    Fp2 a = f.from_index(x), b = f.from_index(y), c = f.from_index(z);
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
        CHECK_THROWS_AS(f.inv(Fp2{0, 0}), cdlat::DivisionByZero);
    }
}

TEST_CASE("multiplicative group of GF(49) has order 48") {
    Fp2Field f(7);
    // t is not a generator necessarily, but every nonzero element has
    // multiplicative order dividing 48
    for (int x = 1; x < 49; ++x) {
        Fp2 a = f.from_index(x);
        Fp2 acc{1, 0};
        for (int k = 0; k < 48; ++k) acc = f.mul(acc, a);
        CHECK(acc == Fp2{1, 0});
    }
}
