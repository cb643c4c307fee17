#include "netopt/clock.hpp"

#include "netopt/errors.hpp"

namespace netopt {

namespace {
// ceil(n * a / b) for non-negative n.
std::int64_t ceil_div_prod(std::int64_t n, std::int64_t a, std::int64_t b) {
  return (n * a + b - 1) / b;
}
}  // namespace

ClockSchedule::ClockSchedule(int numer, int denom) : numer_(numer), denom_(denom) {
  if (denom < 1 || numer < 1 || numer > denom)
    throw ConfigError("tick-ratio must satisfy 1 <= a <= b");
}

bool ClockSchedule::ticks_at(std::int64_t global_tick) const {
  if (global_tick < 0) return false;
  return ceil_div_prod(global_tick + 1, numer_, denom_) >
         ceil_div_prod(global_tick, numer_, denom_);
}

std::int64_t ClockSchedule::ticks_through(std::int64_t n) const {
  if (n < 0) return 0;
  return ceil_div_prod(n + 1, numer_, denom_);
}

}  // namespace netopt
