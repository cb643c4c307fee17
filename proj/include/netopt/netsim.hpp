#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <vector>

#include "netopt/algo.hpp"
#include "netopt/channel.hpp"
#include "netopt/clock.hpp"
#include "netopt/config.hpp"
#include "netopt/objective.hpp"
#include "netopt/protocol.hpp"

namespace netopt {

/// Outcome of one channel within a tick. Inactive edges (not in the tick's
/// topology) are the quasi-equivalent "fail with probability 1" view: no
/// randomness is consumed for them.
struct ChannelOutcome {
  int from = 0, to = 0;
  int state = 0;     // Markov state after this tick's step
  bool active = false;
  bool delivered = false;
};

/// Everything observable about one executed global tick.
struct TickReport {
  std::int64_t tick = 0;
  int topology = 0;                  // switching sample xi^n
  std::vector<bool> active;          // Y^n
  std::vector<std::int64_t> nu;      // nu(n, i) after this tick
  std::vector<int> xi_used;          // noise index each updater saw; -1 if idle
  std::vector<ChannelOutcome> channels;
  int messages_sent = 0;             // transmission attempts on active edges
  int messages_delivered = 0;
  LambdaDiag lambda;
};

struct AgentState {
  int id = 0;
  Eigen::VectorXd estimate;   // own block (optimize) or solution view (consensus)
  EstimateList list;
  std::vector<EstimateList> inbox;
  std::int64_t update_count = 0;  // nu
  ClockSchedule clock{1, 1};
};

/// Single-threaded deterministic discrete-event core. One network tick per
/// global tick; within a tick, in order: switching sample, Markov channel
/// steps, sends along active out-edges with same-tick one-hop delivery,
/// then local updates for the agents whose clocks ticked.
///
/// In optimization mode received lists are merged on arrival each tick
/// and active agents run the delayed-gradient descent step. In consensus
/// mode arrivals are buffered and merged at the receiver's next local
/// tick; agent 1 is the arbiter.
class Simulation {
public:
  explicit Simulation(const ResolvedSetup& setup);

  TickReport advance_tick();

  std::int64_t tick_count() const { return tick_count_; }

  /// nu(n, i): local updates of agent i through the last executed tick.
  std::int64_t nu(int agent) const;

  /// Age of the value agent `holder` caches for producer slot `slot`,
  /// counted as ticks since the entry was produced; own slots are 0.
  std::int64_t estimate_age(int slot, int holder) const;

  /// Effective transmission delay over the piecewise-constant trajectory:
  /// ticks since the held value was last current at its producer. 0 when
  /// the holder has the producer's newest value.
  std::int64_t transmission_delay(int slot, int holder) const;

  int slot_count() const;
  int slot_producer(int slot) const;

  /// Concatenated current own estimates (the global decision vector) in
  /// optimization mode; the arbiter's solution estimate in consensus mode.
  Eigen::VectorXd assembled_estimate() const;

  /// F at the assembled estimate: the switching-law expectation of the
  /// sampled objective (optimize) or the cumulative local objective at the
  /// arbiter's estimate (consensus).
  double objective_value() const;

  const AgentState& agent(int i) const { return agents_[static_cast<std::size_t>(i)]; }
  const ResolvedSetup& setup() const { return setup_; }
  const StochasticObjective* objective() const { return objective_.get(); }
  const ConsensusQuadratics* consensus_objective() const {
    return consensus_ ? &*consensus_ : nullptr;
  }

  bool diverged() const { return diverged_; }
  int diverged_agent() const { return diverged_agent_; }

  /// Diagnostic hook: permuted within-tick update order. Results must not
  /// depend on it; the permutation test asserts that.
  void set_update_order(std::vector<int> order);

private:
  void flush_inbox(AgentState& agent);
  void optimize_update(AgentState& agent, std::int64_t tick, int topology_sample,
                       TickReport& report);
  void consensus_update(AgentState& agent, std::int64_t tick);
  Eigen::VectorXd assemble_from_list(const EstimateList& list) const;
  Eigen::VectorXd bounded_noise(int agent_dim, RandomStream& stream) const;
  void check_guard(const AgentState& agent);

  ResolvedSetup setup_;
  DimensionLayout layout_;                 // optimize mode block structure
  std::shared_ptr<StochasticObjective> objective_;   // optimize mode
  std::optional<ConsensusQuadratics> consensus_;     // consensus mode
  std::vector<std::pair<int, int>> union_edges_;
  std::vector<FadingChannel> channels_;    // aligned with union_edges_
  std::vector<AgentState> agents_;
  std::vector<int> update_order_;
  RandomStream switch_stream_;
  std::vector<RandomStream> xi_streams_;   // per agent (per-agent noise mode)
  std::vector<RandomStream> spsa_streams_;
  std::vector<RandomStream> eps_streams_;
  std::int64_t tick_count_ = 0;
  // production_ticks_[slot][s-1] = global tick at which stamp s was produced.
  std::vector<std::vector<std::int64_t>> production_ticks_;
  bool diverged_ = false;
  int diverged_agent_ = -1;
};

}  // namespace netopt
