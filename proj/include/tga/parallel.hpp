#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace tga {

/// Worker count from the TGA_WORKERS environment variable, else the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Runs body(chunk, begin, end) over [0, n) split into `chunks` contiguous
/// ranges. Chunk boundaries depend only on n and chunks, never on the worker
/// count, so per-chunk results are reproducible. Exceptions from the body are
/// rethrown after all workers join (the first chunk's error wins).
void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& body);

/// body(i) for i in [0, n), spread over the worker pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tga
