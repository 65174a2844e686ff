#ifndef CDLAT_SUBGROUP_OPS_HPP
#define CDLAT_SUBGROUP_OPS_HPP

#include <span>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

/// Smallest subgroup containing `gens`: multiply-and-absorb saturation.
/// closure(G, {}) is the trivial subgroup.
Bitset closure(const Group& g, std::span<const int> gens);
Bitset closure(const Group& g, std::initializer_list<int> gens);

/// Saturates `closed` (which must already be a subgroup, or {0}) together
/// with the extra generators. Incremental: only products involving new
/// elements are formed.
Bitset closure_extend(const Group& g, const Bitset& closed, std::span<const int> extra);

bool is_subgroup(const Group& g, const Bitset& h);

/// Greedy ascending-id generating set of a subgroup (deterministic, small).
std::vector<int> generating_set(const Group& g, const Bitset& h);

/// {h : g h == h g}. One O(n) row scan.
Bitset element_centralizer(const Group& g, int x);

/// C_G(H) via intersection of element centralizers of a generating set of H.
/// Equals the definitional scan (see centralizer_scan) by construction.
Bitset centralizer(const Group& g, const Bitset& h);

/// The literal definition: {x : x h == h x for every h in H}. Independent
/// route kept callable as the oracle for the generating-set optimization.
Bitset centralizer_scan(const Group& g, const Bitset& h);

/// Z(G) = C_G(G). `threads` parallelizes the per-element commuting scan.
Bitset center(const Group& g, int threads = 1);

Bitset conjugate_subgroup(const Group& g, const Bitset& h, int x); // x H x^-1

bool is_normal(const Group& g, const Bitset& h);

/// Every pair of elements of the subset commutes.
bool is_abelian_subset(const Group& g, const Bitset& h);

/// Upper central series via commutator membership: Z_{i+1} = {g : [g, x] in Z_i
/// for all x}. True iff the series reaches G.
bool is_nilpotent(const Group& g);

/// The full ascending series 1 = Z_0 <= Z_1 = Z(G) <= ... up to stabilization.
std::vector<Bitset> upper_central_series(const Group& g);

} // namespace cdlat

#endif
