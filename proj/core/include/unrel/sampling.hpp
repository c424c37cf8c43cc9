#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "unrel/log_weight.hpp"
#include "unrel/rng.hpp"

namespace unrel {

/// Result of one estimation run. The estimate is kept in the log domain; the
/// linear value underflows in the very reliable regime.
struct EstimateReport {
  LogWeight estimate;
  std::uint64_t samples = 0;
  /// Sample variance over squared sample mean of the samples averaged.
  double rel_variance_hat = 0.0;
  std::string method;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  /// Importance sampling only: whether the contracted-graph packing was used.
  bool q1_active = false;
};

/// One independent draw of a nonnegative estimator.
using Sampler = std::function<LogWeight(Rng&)>;

/// Samples are drawn in fixed chunks; chunk c always uses the stream
/// derive_seed(seed, c), and chunk accumulators merge in chunk order, so the
/// result does not depend on the worker count.
inline constexpr std::uint64_t kSampleChunk = 64;

/// Draws `count` samples with up to `workers` threads (0 means hardware
/// concurrency). The sampler must be safe to call concurrently.
LogAccumulator draw_samples(const Sampler& sampler, std::uint64_t count, std::uint64_t seed, int workers = 1);

/// Runs body(i) for i in [0, count) on up to `workers` threads, rethrowing the
/// first exception.
void parallel_for(std::uint64_t count, int workers, const std::function<void(std::uint64_t)>& body);

}  // namespace unrel
