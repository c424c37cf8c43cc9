#include "unrel/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace unrel {

void parallel_for(std::uint64_t count, int workers, const std::function<void(std::uint64_t)>& body) {
  if (count == 0) return;
  if (workers <= 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const auto threads = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), count));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::uint64_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

LogAccumulator draw_samples(const Sampler& sampler, std::uint64_t count, std::uint64_t seed, int workers) {
  const std::uint64_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  std::vector<LogAccumulator> partial(chunks);
  parallel_for(chunks, workers, [&](std::uint64_t c) {
    Rng rng = make_rng(seed, c);
    const std::uint64_t end = std::min(count, (c + 1) * kSampleChunk);
    for (std::uint64_t i = c * kSampleChunk; i < end; ++i) partial[c].add(sampler(rng));
  });
  LogAccumulator total;
  for (const auto& acc : partial) total.merge(acc);
  return total;
}

}  // namespace unrel
