#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netopt/channel.hpp"
#include "netopt/graph.hpp"
#include "netopt/objective.hpp"
#include "netopt/schedule.hpp"

namespace netopt {

enum class Mode { Optimize, Consensus };
enum class GradientKind { Exact, Spsa };
enum class EstimateTraceMode { Norms, Full };

/// Initial-estimate law: annulus r in [inner, outer] or ball of the given
/// radius, both centered at the origin. Direction uniform on the sphere,
/// radius by inverse CDF of the volume-uniform law.
struct InitSpec {
  enum class Kind { Annulus, Ball };
  Kind kind = Kind::Ball;
  double inner = 0.0;
  double outer = 1.0;
};

struct TopologySpec {
  std::vector<Digraph> graphs;  // explicit when non-empty
  int generate_count = 0;       // otherwise: sample this many digraphs...
  int generate_edges = 0;       // ...with exactly this many edges each
  bool generated() const { return graphs.empty(); }
};

struct TickRatioSpec {
  std::vector<std::pair<int, int>> ratios;  // explicit (numer, denom) per agent
  // Sampled mode: numerator uniform on {min_numer..max_numer} over a fixed
  // denominator, the rational grid closest to U[min/den, max/den].
  int sample_min_numer = 12;
  int sample_max_numer = 60;
  int sample_denominator = 60;
  bool sampled() const { return ratios.empty(); }
};

struct ChannelOverride {
  int from = 0, to = 0;  // 0-based vertex ids
  ChannelParams params;
  int initial_state = 0;
};

struct ChannelSpec {
  ChannelParams default_params = ChannelParams::reference_good_bad();
  int default_initial_state = 0;
  std::vector<ChannelOverride> overrides;
};

struct ObjectiveSpec {
  enum class Kind { Laplacian, ConsensusQuadratics };
  Kind kind = Kind::Laplacian;
  double perturbation = 0.1;  // laplacian
  // Consensus instance: generated from the seed unless given explicitly.
  std::optional<ConsensusQuadratics> instance;
};

struct TraceOptions {
  EstimateTraceMode estimates = EstimateTraceMode::Full;
  std::optional<bool> delays;  // default: record iff agent count <= 4
};

struct VerifyOptions {
  double eta = 0.75;                   // (A2)(v)(a) exponent
  std::optional<double> a4_floor;      // default rho_min / 2
  std::int64_t schedule_horizon = 10000;
};

/// Full experiment description. May contain generator specs (topologies,
/// tick ratios, consensus instance); resolve() expands them
/// deterministically from a replication seed.
struct SimConfig {
  int version = 1;
  Mode mode = Mode::Optimize;
  int agent_count = 0;
  std::vector<int> agent_dims;  // optimize mode, one entry per agent
  int consensus_dim = 0;        // consensus mode
  TopologySpec topologies;
  std::vector<double> switch_weights;  // empty = uniform
  ChannelSpec channels;
  TickRatioSpec tick_ratios;
  StepSizeSchedule schedule = StepSizeSchedule::reciprocal_affine(50.0, 50.0);
  ObjectiveSpec objective;
  GradientKind gradient = GradientKind::Exact;
  double spsa_c = 0.01;
  NoiseMode noise_mode = NoiseMode::Shared;
  double epsilon_noise = 0.0;
  InitSpec init;
  std::int64_t horizon = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;  // seed is mandatory; no wall-clock entropy
  double guard = 1e9;
  TraceOptions trace;
  VerifyOptions verify;

  /// Schema and consistency validation (dimensions, stochastic matrices,
  /// horizon, seed presence). Connectivity is checked on the resolved
  /// setup. Throws ConfigError.
  void validate() const;

  static SimConfig from_json(const nlohmann::json& j);
  static SimConfig load_file(const std::string& path);
  nlohmann::json to_json() const;

  bool record_delays() const {
    return trace.delays.value_or(agent_count <= 4);
  }
};

/// A SimConfig with every generator expanded for one replication seed:
/// explicit topologies, tick ratios, per-union-edge channels, consensus
/// instance. This is what a Simulation consumes and what gets dumped next
/// to the traces.
struct ResolvedSetup {
  SimConfig config;          // with generators replaced by explicit values
  std::uint64_t seed = 0;    // replication master seed
  Digraph union_topology{1};
  std::vector<double> switch_weights;
  // Channels aligned with union_topology.edges() order.
  std::vector<ChannelParams> channel_params;
  std::vector<int> channel_initial_states;

  static ResolvedSetup resolve(const SimConfig& raw, std::uint64_t replication_seed);

  const std::vector<Digraph>& topologies() const { return config.topologies.graphs; }
  DimensionLayout layout() const;
  double rho_min() const;

  nlohmann::json to_json() const;
  static ResolvedSetup from_json(const nlohmann::json& j);

  /// FNV-1a hash of the canonical resolved JSON, stamped into every
  /// output file.
  std::uint64_t config_hash() const;
};

/// Built-in experiment presets ("paper-sec5", "paper-sec6").
std::vector<std::string> preset_names();
SimConfig preset(const std::string& name);
std::string preset_description(const std::string& name);

}  // namespace netopt
