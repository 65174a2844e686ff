#ifndef CDLAT_FROBENIUS_HPP
#define CDLAT_FROBENIUS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "cdlat/bitset.hpp"
#include "cdlat/cd_engine.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

/// The four equivalent conditions for a complement A of a normal subgroup N:
///  [0] the conjugation action of A on N fixes no nonidentity pair;
///  [1] A meets its conjugates from outside A trivially;
///  [2] C_G(a) <= A for every nonidentity a in A;
///  [3] C_G(n) <= N for every nonidentity n in N.
/// All four are evaluated independently; they must agree.
struct FrobeniusWitness {
    Bitset kernel;
    Bitset complement;
    std::array<bool, 4> condition_results{};
    bool is_frobenius = false; // definitional condition and both parts nontrivial
};

/// Requires N normal and A a complement (trivial intersection, full product);
/// throws NotAComplement with a witness otherwise.
FrobeniusWitness frobenius_conditions(const Group& g, const Bitset& n, const Bitset& a);

/// Corollary-2 search: some x in H whose stabilizer C_N(x) under conjugation
/// is trivial. N must be abelian, coprime to H, normalize H, and act
/// faithfully. Returns nullopt when no such x exists — a theorem violation
/// the caller reports, not an error.
std::optional<int> regular_orbit_search(const Group& g, const Bitset& n, const Bitset& h);

/// CD lattice of the subgroup N computed inside the restricted group and
/// mapped back to ambient element ids. group_order is |N|.
CDReport cd_lattice_within(const Group& g, const Bitset& n, CdMethod method,
                           const CdLimits& limits = {});

struct Theorem6Report {
    std::map<std::string, bool> checks;
    bool passed = false;
    CDReport cd_g;
    CDReport cd_n;
};

/// Mechanical checks for the kernel-determines-the-lattice theorem on a
/// concrete Frobenius group: congruences |N| == 1 and |Z(N)| == 1 (mod |A|),
/// trivial center, nilpotent kernel, m_G(N) = |N||Z(N)| > |G|, neither 1 nor
/// G attaining the maximum, and CD(G) equal to CD(N) member-for-member with
/// agreeing measures.
Theorem6Report verify_theorem6(const Group& g, const Bitset& n, const Bitset& a,
                               const CdLimits& limits = {});

} // namespace cdlat

#endif
