#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace ghzlab::detail {

// Splits [0, total) into at most `workers` contiguous chunks and runs
// fn(chunk_index, begin, end) on one thread per chunk. Callers keep per-chunk
// results and merge them in chunk order, which makes the outcome independent
// of the worker count.
template <typename Fn>
int run_partitioned(std::uint64_t total, int workers, Fn&& fn) {
  if (workers < 1) {
    workers = 1;
  }
  const std::uint64_t chunk_count =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total == 0 ? 1 : total);
  if (chunk_count <= 1) {
    fn(0, std::uint64_t{0}, total);
    return 1;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunk_count);
  const std::uint64_t base = total / chunk_count;
  const std::uint64_t extra = total % chunk_count;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    const std::uint64_t end = begin + base + (c < extra ? 1 : 0);
    threads.emplace_back([&fn, c, begin, end] { fn(static_cast<int>(c), begin, end); });
    begin = end;
  }
  for (auto& t : threads) {
    t.join();
  }
  return static_cast<int>(chunk_count);
}

}  // namespace ghzlab::detail
