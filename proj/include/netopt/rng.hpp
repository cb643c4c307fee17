#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace netopt {

/// 64-bit FNV-1a hash, used to derive substream seeds from labels.
std::uint64_t fnv1a64(std::string_view s);

std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic random stream. One master seed fans out into named
/// substreams so that consuming draws in one component never shifts the
/// draws seen by another. The engine is std::mt19937_64 (bit-exact per the
/// standard); distribution helpers are implemented here because the
/// standard library's distribution output is implementation-defined and
/// would break byte-identical traces across platforms.
class RandomStream {
public:
  RandomStream() : engine_(0) {}
  RandomStream(std::uint64_t master_seed, std::string_view label);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform();
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller; pairs are cached.
  double normal();

  bool bernoulli(double p) { return uniform() < p; }

  /// Index sampled proportionally to the (non-negative) weights.
  int categorical(const std::vector<double>& weights);

  /// Uniform integer in [lo, hi] inclusive, by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// +1 or -1 with equal probability.
  double rademacher() { return bernoulli(0.5) ? 1.0 : -1.0; }

private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace netopt
