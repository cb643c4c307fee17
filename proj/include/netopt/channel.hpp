#pragma once

#include <Eigen/Dense>

#include "netopt/rng.hpp"

namespace netopt {

/// Markov fading-channel parameters: a K-state chain with row-stochastic
/// transition matrix and a per-state drop (crossover) probability. The
/// steady-state vector is computed, never supplied.
struct ChannelParams {
  Eigen::MatrixXd transition;
  Eigen::VectorXd crossover;

  int state_count() const { return static_cast<int>(crossover.size()); }

  /// Throws ConfigError on malformed parameters: rows must sum to 1 within
  /// 1e-12, all entries and crossover values in [0, 1].
  void validate() const;

  /// Solves p^T T = p^T, sum(p) = 1 (minimum-norm least squares, so
  /// reducible chains get a valid distribution too). Residual must be
  /// within 1e-9 or this throws.
  Eigen::VectorXd steady_state() const;

  /// Reference two-state good/bad channel: T = [[0.9,0.1],[0.2,0.8]],
  /// e = (0.05, 0.6).
  static ChannelParams reference_good_bad();
};

/// One directed wireless link. The Markov state advances exactly once per
/// network tick (step_state); transmission attempts sample the current
/// state's crossover probability without advancing the chain. Each channel
/// owns a dedicated random substream, so outcomes on distinct edges are
/// independent and the full (state, outcome) sequence is reproducible.
class FadingChannel {
public:
  FadingChannel(ChannelParams params, int initial_state, RandomStream stream);

  /// Samples the next state from the current transition row.
  int step_state();

  /// True with probability 1 - crossover[current state].
  bool attempt_transmission();

  int current_state() const { return current_; }
  const ChannelParams& params() const { return params_; }
  const Eigen::VectorXd& steady_state() const { return steady_; }

private:
  ChannelParams params_;
  Eigen::VectorXd steady_;
  std::vector<std::vector<double>> rows_;
  int current_;
  RandomStream stream_;
};

}  // namespace netopt
