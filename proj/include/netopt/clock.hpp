#pragma once

#include <cstdint>

namespace netopt {

/// Deterministic local-clock pattern with tick-ratio a/b: the agent's
/// clock ticks at global tick n (0-based) iff ceil((n+1)a/b) > ceil(n*a/b).
/// The true entries are spread evenly, every window of b consecutive
/// network ticks contains exactly a local ticks, and the long-run
/// frequency is exactly a/b.
class ClockSchedule {
public:
  ClockSchedule(int numer, int denom);

  bool ticks_at(std::int64_t global_tick) const;

  /// Number of local ticks among global ticks 0..n inclusive.
  std::int64_t ticks_through(std::int64_t n) const;

  double ratio() const { return static_cast<double>(numer_) / denom_; }
  int numer() const { return numer_; }
  int denom() const { return denom_; }

private:
  int numer_;
  int denom_;
};

}  // namespace netopt
