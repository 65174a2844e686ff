#ifndef CDLAT_PARALLEL_HPP
#define CDLAT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cdlat {

/// Worker count actually used for `threads` requested (0 = hardware).
int resolve_threads(int threads);

/// Splits [0, n) into contiguous chunks and runs `fn(begin, end, chunk_index)`
/// on up to `threads` workers. Chunk boundaries depend only on n and the
/// worker count requested, never on scheduling; callers that merge per-chunk
/// results in chunk_index order get deterministic output.
void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn);

} // namespace cdlat

#endif
