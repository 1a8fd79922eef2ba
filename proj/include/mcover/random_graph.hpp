#pragma once

#include <cstdint>
#include <random>

#include "mcover/graph.hpp"

namespace mcover {

/// 64-bit Mersenne Twister with distribution helpers that do not depend on
/// the standard library's (implementation-defined) distributions, so a seed
/// yields the same graphs on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// G(n, p) conditioned on connectivity by rejection. Throws
/// PreconditionError after `max_attempts` disconnected draws.
Graph random_connected_gnp(Vertex n, double p, Rng& rng, int max_attempts = 100'000);

/// Connected graph with exactly m edges: a random recursive spanning tree
/// (each vertex of a random order attaches to a uniform earlier one) plus
/// m − (n − 1) further edges drawn uniformly from the remaining pairs.
Graph random_connected_gnm(Vertex n, std::size_t m, Rng& rng);

}  // namespace mcover
