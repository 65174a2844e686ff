#ifndef CDLAT_GF_HPP
#define CDLAT_GF_HPP

namespace cdlat::gf {

/// Prime field GF(p), elements 0..p-1.
class Fp {
public:
    /// p must be an odd prime (throws InvalidParameters).
    explicit Fp(int p);

    int p() const { return p_; }

    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b % p_ + p_) % p_; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }
    int mul(int a, int b) const { return a * b % p_; }
    int inv(int a) const; // DivisionByZero on 0
    int pow(int a, long long e) const;

private:
    int p_;
};

/// Smallest quadratic non-residue modulo the odd prime p.
int smallest_nonresidue(int p);

/// Element c0 + c1*t of GF(p^2) = GF(p)[t] / (t^2 - kappa).
struct Fp2 {
    int c0 = 0;
    int c1 = 0;
    bool operator==(const Fp2&) const = default;
};

/// Quadratic extension field GF(p^2) with modulus t^2 - kappa, kappa the
/// smallest quadratic non-residue mod p (deterministic model). GF(p) embeds
/// as the c1 = 0 elements.
class Fp2Field {
public:
    explicit Fp2Field(int p);

    int p() const { return base_.p(); }
    int kappa() const { return kappa_; }
    const Fp& base() const { return base_; }

    Fp2 embed(int c) const { return Fp2{c % base_.p(), 0}; }
    Fp2 t() const { return Fp2{0, 1}; }

    Fp2 add(Fp2 a, Fp2 b) const { return {base_.add(a.c0, b.c0), base_.add(a.c1, b.c1)}; }
    Fp2 sub(Fp2 a, Fp2 b) const { return {base_.sub(a.c0, b.c0), base_.sub(a.c1, b.c1)}; }
    Fp2 neg(Fp2 a) const { return {base_.neg(a.c0), base_.neg(a.c1)}; }

    // (a0 + a1 t)(b0 + b1 t) = a0 b0 + kappa a1 b1 + (a0 b1 + a1 b0) t
    Fp2 mul(Fp2 a, Fp2 b) const {
        return {base_.add(base_.mul(a.c0, b.c0), base_.mul(kappa_, base_.mul(a.c1, b.c1))),
                base_.add(base_.mul(a.c0, b.c1), base_.mul(a.c1, b.c0))};
    }

    /// Scalar multiple by an embedded GF(p) value.
    Fp2 scale(int s, Fp2 a) const { return {base_.mul(s, a.c0), base_.mul(s, a.c1)}; }

    Fp2 inv(Fp2 a) const; // DivisionByZero on 0

    bool is_zero(Fp2 a) const { return a.c0 == 0 && a.c1 == 0; }

    /// Index of an element in the coefficient-lexicographic enumeration
    /// (c0 major, c1 minor); the inverse of `from_index`.
    int to_index(Fp2 a) const { return a.c0 * base_.p() + a.c1; }
    Fp2 from_index(int i) const { return {i / base_.p(), i % base_.p()}; }

private:
    Fp base_;
    int kappa_;
};

} // namespace cdlat::gf

#endif
