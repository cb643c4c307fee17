#include "netopt/channel.hpp"

#include <cmath>

#include "netopt/errors.hpp"

namespace netopt {

void ChannelParams::validate() const {
  const int k = state_count();
  if (k < 1) throw ConfigError("channel: needs at least one state");
  if (transition.rows() != k || transition.cols() != k)
    throw ConfigError("channel: transition matrix must be KxK with K = crossover size");
  for (int i = 0; i < k; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < k; ++j) {
      const double t = transition(i, j);
      if (!(t >= 0.0 && t <= 1.0))
        throw ConfigError("channel: transition entries must be in [0,1]");
      row_sum += t;
    }
    if (std::abs(row_sum - 1.0) > 1e-12)
      throw ConfigError("channel: transition row " + std::to_string(i) +
                        " does not sum to 1");
  }
  for (int i = 0; i < k; ++i) {
    const double e = crossover(i);
    if (!(e >= 0.0 && e <= 1.0))
      throw ConfigError("channel: crossover entries must be in [0,1]");
  }
}

Eigen::VectorXd ChannelParams::steady_state() const {
  validate();
  const int k = state_count();
  // (T^t - I) p = 0 together with 1^T p = 1, solved in the least-squares
  // sense; minimum-norm handles chains with non-unique stationary laws.
  Eigen::MatrixXd system(k + 1, k);
  system.topRows(k) = transition.transpose() - Eigen::MatrixXd::Identity(k, k);
  system.bottomRows(1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  Eigen::VectorXd p = system.completeOrthogonalDecomposition().solve(rhs);
  for (int i = 0; i < k; ++i) {
    if (p(i) < -1e-9) throw ConfigError("channel: steady-state solve left a negative entry");
    p(i) = std::max(p(i), 0.0);
  }
  p /= p.sum();
  const double residual = (transition.transpose() * p - p).lpNorm<Eigen::Infinity>();
  if (residual > 1e-9)
    throw ConfigError("channel: steady-state residual " + std::to_string(residual) +
                      " exceeds 1e-9");
  return p;
}

ChannelParams ChannelParams::reference_good_bad() {
  ChannelParams params;
  params.transition.resize(2, 2);
  params.transition << 0.9, 0.1, 0.2, 0.8;
  params.crossover.resize(2);
  params.crossover << 0.05, 0.6;
  return params;
}

FadingChannel::FadingChannel(ChannelParams params, int initial_state, RandomStream stream)
    : params_(std::move(params)), current_(initial_state), stream_(std::move(stream)) {
  params_.validate();
  steady_ = params_.steady_state();
  if (initial_state < 0 || initial_state >= params_.state_count())
    throw ConfigError("channel: initial state out of range");
  rows_.resize(params_.state_count());
  for (int i = 0; i < params_.state_count(); ++i) {
    rows_[i].resize(params_.state_count());
    for (int j = 0; j < params_.state_count(); ++j) rows_[i][j] = params_.transition(i, j);
  }
}

int FadingChannel::step_state() {
  current_ = stream_.categorical(rows_[current_]);
  return current_;
}

bool FadingChannel::attempt_transmission() {
  return !stream_.bernoulli(params_.crossover(current_));
}

}  // namespace netopt
