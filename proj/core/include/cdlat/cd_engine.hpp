#ifndef CDLAT_CD_ENGINE_HPP
#define CDLAT_CD_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/automorphisms.hpp"
#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"
#include "cdlat/subgroup_enum.hpp"

namespace cdlat {

enum class CdMethod { closure_family, brute_force };

const char* cd_method_name(CdMethod m);

struct CdLimits {
    std::size_t family_bound = 200000; // centralizer-closure family size guard
    EnumLimits enum_limits;            // brute-force oracle guards
    AutLimits aut_limits;              // characteristic check guard
    int threads = 1;
};

/// m_G(H) = |H| * |C_G(H)|. Exact integer; bounded by |G|^2.
std::int64_t cd_measure(const Group& g, const Bitset& h);

/// All distinct intersections of element centralizers (G included as the
/// empty intersection). Every subgroup H with C_G(C_G(H)) = H lies here, so
/// the family always contains the full CD lattice. Canonically ordered.
///
/// When `elem_to_index` is non-null it receives, per element id, the family
/// index of that element's centralizer (valid for the returned ordering).
std::vector<Bitset> centralizer_closed_family(const Group& g, const CdLimits& limits = {},
                                              std::vector<std::uint32_t>* elem_to_index = nullptr);

struct CDReport {
    std::int64_t group_order = 0;
    std::int64_t max_measure = 0;
    std::vector<Bitset> members; // canonical order
    Bitset cd_subgroup;          // minimum member M(G)
    Bitset top;                  // maximum member
    bool is_chain = false;
    std::optional<int> chain_length;
    CdMethod method = CdMethod::closure_family;
    std::map<std::string, Ternary> property_checks;
    std::int64_t runtime_ms = 0;
};

/// Computes m(G) and the full CD lattice by the requested method and runs the
/// lattice property checks. The two methods agree whenever both can run.
CDReport cd_lattice(const Group& g, CdMethod method, const CdLimits& limits = {});

/// The unique minimum member (equals the meet of all members).
const Bitset& cd_subgroup(const CDReport& report);

/// Evaluates and records: sublattice closure under meet/join, the modular law
/// over member triples, the duality H -> C_G(H) (member-to-member, involutive,
/// inclusion-reversing), M(G) abelian and containing Z(G), and M(G)
/// characteristic (Unknown above the automorphism guard).
std::map<std::string, Ternary> verify_cd_properties(const Group& g, const CDReport& report,
                                                    const CdLimits& limits = {});

} // namespace cdlat

#endif
