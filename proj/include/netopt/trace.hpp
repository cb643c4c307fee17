#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace netopt {

struct TraceMeta {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::string mode = "optimize";
  int agents = 0;
  std::vector<int> dims;  // per agent (optimize) or the common dim (consensus)
  std::int64_t horizon = 0;
  double rho_min = 1.0;
  double initial_objective = 0.0;
  double initial_distance = 0.0;
  bool full_estimates = false;
  // Monitored (producer slot, holder) pairs for the delay columns.
  std::vector<std::pair<int, int>> delay_pairs;
};

struct TraceRow {
  std::int64_t tick = 0;
  int topology = 0;
  std::vector<bool> active;
  std::vector<std::int64_t> nu;
  std::vector<double> q;          // relative-step diagnostics per agent
  std::vector<double> norms;      // per-agent estimate norms
  std::vector<double> estimates;  // flattened snapshots when full_estimates
  double objective = 0.0;
  double distance = 0.0;          // to the known minimizer
  double max_delay = 0.0;
  double mean_delay = 0.0;
  std::vector<std::int64_t> delays;  // aligned with meta.delay_pairs
};

/// Append-only per-tick record. The CSV form is byte-stable for a given
/// (config, seed): one metadata comment line, one header line, horizon
/// rows, doubles printed with %.17g.
class Trace {
public:
  TraceMeta meta;
  std::vector<TraceRow> rows;

  std::string header_line() const;
  void write_csv(const std::string& path) const;
  static Trace read_csv(const std::string& path);
};

/// %.17g, the round-trippable double format used in every output file.
std::string format_double(double v);

}  // namespace netopt
