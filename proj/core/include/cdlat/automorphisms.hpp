#ifndef CDLAT_AUTOMORPHISMS_HPP
#define CDLAT_AUTOMORPHISMS_HPP

#include <cstdint>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

/// Three-valued answer for guarded predicates: Unknown is a value, not an error.
enum class Ternary : std::uint8_t { False = 0, True = 1, Unknown = 2 };

const char* ternary_name(Ternary t);

struct AutLimits {
    int max_order = 512;             // SizeGuard beyond this group order
    std::size_t max_count = 1 << 20; // SizeGuard if more automorphisms than this
    // extension-step budget; groups whose automorphism group is too large to
    // enumerate trip this deterministically instead of running away
    std::uint64_t max_steps = 200'000'000;
};

/// All automorphisms of G as element permutations (maps[i][g] = image of g),
/// found by backtracking over images of a greedy generating sequence.
/// Candidate images are filtered by element order; partial maps are extended
/// by closure with consistency checks against the table.
/// Throws SizeGuard when |G| > limits.max_order or the count guard trips.
std::vector<std::vector<int>> automorphisms_small(const Group& g, AutLimits limits = {});

/// Generating sequence used by the backtracking search: repeatedly adjoins the
/// element giving the largest closure growth (ties to the smallest id).
std::vector<int> greedy_generating_sequence(const Group& g);

/// True iff every automorphism fixes H setwise; Unknown above the guard.
Ternary is_characteristic(const Group& g, const Bitset& h, AutLimits limits = {});

} // namespace cdlat

#endif
