#ifndef CDLAT_CONSTRUCTORS_HPP
#define CDLAT_CONSTRUCTORS_HPP

#include <cstdint>
#include <memory>

#include "cdlat/group.hpp"
#include "cdlat/group_spec.hpp"

namespace cdlat {

/// Memory ceiling for dense Cayley tables (bytes). Above it, the semidirect
/// extension constructor falls back to the compact representation; everything
/// else refuses with SizeGuard.
struct TableBudget {
    std::size_t max_bytes = std::size_t{1} << 31; // 2 GiB
};

Group cyclic_group(int n);

/// Dihedral group of the given (even, >= 4) order: two_n = 2n with n rotations.
Group dihedral_group(int two_n);

Group quaternion8_group();

/// Symmetric group S_k for k <= 5, elements in lexicographic one-line order.
Group symmetric_group(int k);

Group direct_product(const Group& left, const Group& right, TableBudget budget = {});

/// ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r> on pairs (i, j) <-> a^i b^j,
/// id = i*n + j. Requires gcd(m,n) = gcd(m,r-1) = 1 and r^n == 1 (mod m);
/// throws InvalidZMParameters naming the violated condition.
Group zm_group(long long m, long long n, long long r, TableBudget budget = {});

/// Semidirect product A x| B for abelian A, B of coprime orders; `action`
/// assigns to each canonical generator of B an automorphism of A by images of
/// A's canonical generators. Validated: each map extends to an automorphism,
/// and the assignment extends to a homomorphism B -> Aut(A).
/// Pairs (a, b) <-> id a*|B| + b; the A copy is normal, the B copy a complement.
Group semidirect_product(const Group& a, const Group& b, const ActionSpec& action,
                         TableBudget budget = {});

/// Group of upper unitriangular 3x3 matrices with a, b in GF(p^2) and c in
/// GF(p): triples (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b'+a c', c+c').
/// Order p^5, center {(0,b,0)} of order p^2. Named subgroups: "center",
/// "abelian_plane" (= {(a,b,0)}, abelian of index p).
Group heisenberg_gf(int p, TableBudget budget = {});

/// P x| <x> where x acts on the Heisenberg-type group by (a,b,c) ->
/// (lambda a, lambda^2 b, lambda c); the extension has order e*p^5 with e the
/// multiplicative order of lambda mod p. Validates that the action is an
/// automorphism of order e; whether it is fixed-point free is checked and
/// recorded (named subgroups "kernel" and "complement"; query
/// scalar_ext_fixed_point_free for the flag). lambda == 1 is InvalidLambda.
Group scalar_automorphism_extension(std::shared_ptr<const Group> p_group, int lambda,
                                    TableBudget budget = {});

/// True when no nontrivial power of the extension's acting automorphism fixes
/// a nonidentity base element (computed at construction; G must come from
/// scalar_automorphism_extension).
bool scalar_ext_fixed_point_free(const Group& g);

/// Builds any GroupSpec recursively.
Group build_group(const GroupSpec& spec, TableBudget budget = {});

} // namespace cdlat

#endif
