#include "cdlat/gf.hpp"

#include <string>
#include <vector>

#include "cdlat/errors.hpp"
#include "cdlat/numutil.hpp"

namespace cdlat::gf {

Fp::Fp(int p) : p_(p) {
    if (p < 3 || !is_prime(p))
        throw InvalidParameters("GF(p) requires an odd prime, got " + std::to_string(p));
}

int Fp::inv(int a) const {
    a %= p_;
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
}

int Fp::pow(int a, long long e) const {
    return static_cast<int>(pow_mod(a, e, p_));
}

int smallest_nonresidue(int p) {
    std::vector<char> residue(static_cast<std::size_t>(p), 0);
    for (int x = 1; x < p; ++x) residue[static_cast<std::size_t>(x * x % p)] = 1;
    for (int k = 2; k < p; ++k)
        if (!residue[static_cast<std::size_t>(k)]) return k;
    throw InvalidParameters("no quadratic non-residue mod " + std::to_string(p));
}

Fp2Field::Fp2Field(int p) : base_(p), kappa_(smallest_nonresidue(p)) {}

Fp2 Fp2Field::inv(Fp2 a) const {
    if (is_zero(a))
        throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p()) + "^2)");
    // (c0 + c1 t)^-1 = (c0 - c1 t) / (c0^2 - kappa c1^2); the norm is nonzero
    // because t^2 - kappa is irreducible.
    int norm = base_.sub(base_.mul(a.c0, a.c0), base_.mul(kappa_, base_.mul(a.c1, a.c1)));
    int ninv = base_.inv(norm);
    return {base_.mul(a.c0, ninv), base_.mul(base_.neg(a.c1), ninv)};
}

} // namespace cdlat::gf
