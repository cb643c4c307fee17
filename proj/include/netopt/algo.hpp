#pragma once

#include <cstdint>
#include <vector>

#include "netopt/objective.hpp"
#include "netopt/schedule.hpp"

namespace netopt {

/// Per-tick relative-step diagnostics: a_bar = max over active agents of
/// a(nu(n,i)) and q(n,i) = a(nu(n,i)) * 1{i active} / a_bar. Entries lie
/// in [0,1]; inactive agents carry 0. Undefined when no agent is active.
struct LambdaDiag {
  bool defined = false;
  double a_bar = 0.0;
  std::vector<double> q;
};

LambdaDiag lambda_diagnostics(const std::vector<bool>& active,
                              const std::vector<std::int64_t>& nu,
                              const StepSizeSchedule& schedule);

/// Diagonal of the lambda matrix: q(n,i) repeated over agent i's block.
std::vector<double> lambda_diagonal(const LambdaDiag& diag, const DimensionLayout& layout);

}  // namespace netopt
