#include "netopt/algo.hpp"

#include <algorithm>
#include <stdexcept>

namespace netopt {

LambdaDiag lambda_diagnostics(const std::vector<bool>& active,
                              const std::vector<std::int64_t>& nu,
                              const StepSizeSchedule& schedule) {
  if (active.size() != nu.size())
    throw std::invalid_argument("lambda_diagnostics: active/nu size mismatch");
  LambdaDiag diag;
  diag.q.assign(active.size(), 0.0);
  double a_bar = 0.0;
  for (std::size_t i = 0; i < active.size(); ++i)
    if (active[i]) a_bar = std::max(a_bar, schedule(nu[i]));
  if (a_bar <= 0.0) return diag;  // empty active set: skipped for this tick
  diag.defined = true;
  diag.a_bar = a_bar;
  for (std::size_t i = 0; i < active.size(); ++i)
    if (active[i]) diag.q[i] = schedule(nu[i]) / a_bar;
  return diag;
}

std::vector<double> lambda_diagonal(const LambdaDiag& diag, const DimensionLayout& layout) {
  std::vector<double> out(static_cast<std::size_t>(layout.total), 0.0);
  for (int i = 0; i < layout.agent_count(); ++i)
    for (int k = 0; k < layout.dims[static_cast<std::size_t>(i)]; ++k)
      out[static_cast<std::size_t>(layout.offsets[static_cast<std::size_t>(i)] + k)] =
          diag.q[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace netopt
