#ifndef CDLAT_SUBGROUP_ENUM_HPP
#define CDLAT_SUBGROUP_ENUM_HPP

#include <cstddef>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

struct EnumLimits {
    int order_bound = 200;
    std::size_t count_bound = 100000;
    int threads = 1;
};

/// Every subgroup of a small group, canonically ordered (order ascending, then
/// lexicographic on bits). Computed by cyclic-extension search: seed with the
/// distinct cyclic subgroups, then saturate join(H, <g>) over enumerated H and
/// g outside H until no new subgroup appears.
struct SubgroupInventory {
    std::vector<Bitset> subgroups;
    EnumLimits limits;
};

/// Guards are hard errors: a partial inventory is never returned.
SubgroupInventory all_subgroups(const Group& g, EnumLimits limits = {});

inline Bitset meet(const Bitset& h, const Bitset& k) { return h & k; }

/// join = closure of the union.
Bitset join(const Group& g, const Bitset& h, const Bitset& k);

} // namespace cdlat

#endif
