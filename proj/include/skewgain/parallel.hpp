#ifndef SKEWGAIN_PARALLEL_HPP
#define SKEWGAIN_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewgain {

// Execution policy for the data-parallel kernels (brute-force subset scans,
// corpus batch verification). Every kernel has a serial path that produces
// bit-identical results; tests compare the two.
enum class Exec { serial, openmp };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, count). Iterations must be independent.
template <class Fn>
void parallel_for(std::size_t count, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::openmp) {
    const std::int64_t total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

// Splits [0, total) into contiguous blocks and runs fn(begin, end, block) on
// each. Blocks are indexed so callers can merge per-block results in a
// deterministic order regardless of scheduling.
template <class Fn>
void parallel_blocks(std::uint64_t total, Exec exec, Fn&& fn) {
  const int nblocks =
      exec == Exec::openmp ? std::max(1, max_threads() * 4) : 1;
  const std::uint64_t chunk = (total + nblocks - 1) / std::max(1, nblocks);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  for (std::uint64_t b = 0; b * chunk < total; ++b) {
    ranges.emplace_back(b * chunk, std::min(total, (b + 1) * chunk));
  }
  parallel_for(ranges.size(), exec, [&](std::size_t b) {
    fn(ranges[b].first, ranges[b].second, b);
  });
}

}  // namespace skewgain

#endif  // SKEWGAIN_PARALLEL_HPP
