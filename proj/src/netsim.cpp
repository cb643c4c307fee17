#include "netopt/netsim.hpp"

#include <algorithm>
#include <cmath>

#include "netopt/errors.hpp"

namespace netopt {

namespace {

std::string agent_label(const char* prefix, int agent) {
  return std::string(prefix) + "/agent-" + std::to_string(agent + 1);
}

// Volume-uniform draw from the annulus inner <= |x| <= outer (ball when
// inner = 0): direction uniform on the sphere, radius by inverse CDF.
Eigen::VectorXd sample_annulus(int dim, double inner, double outer, RandomStream& stream) {
  Eigen::VectorXd direction(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) direction(i) = stream.normal();
    norm = direction.norm();
  } while (norm == 0.0);
  direction /= norm;
  const double d = static_cast<double>(dim);
  const double lo = std::pow(inner, d), hi = std::pow(outer, d);
  const double radius = std::pow(lo + stream.uniform() * (hi - lo), 1.0 / d);
  return radius * direction;
}

}  // namespace

Simulation::Simulation(const ResolvedSetup& setup)
    : setup_(setup), layout_(DimensionLayout::uniform(1, 1)), switch_stream_(setup.seed, "switch") {
  const SimConfig& cfg = setup_.config;
  cfg.validate();
  const int agents = cfg.agent_count;

  union_edges_ = setup_.union_topology.edges();
  for (std::size_t k = 0; k < union_edges_.size(); ++k) {
    const auto& [from, to] = union_edges_[k];
    const std::string label =
        "channel/" + std::to_string(from + 1) + "->" + std::to_string(to + 1);
    channels_.emplace_back(setup_.channel_params[k], setup_.channel_initial_states[k],
                           RandomStream(setup_.seed, label));
  }

  for (int i = 0; i < agents; ++i) {
    xi_streams_.emplace_back(setup_.seed, agent_label("xi", i));
    spsa_streams_.emplace_back(setup_.seed, agent_label("spsa", i));
    eps_streams_.emplace_back(setup_.seed, agent_label("eps", i));
    update_order_.push_back(i);
  }

  const double inner = cfg.init.kind == InitSpec::Kind::Annulus ? cfg.init.inner : 0.0;
  const double outer = cfg.init.outer;

  if (cfg.mode == Mode::Optimize) {
    layout_ = DimensionLayout::from_dims(cfg.agent_dims);
    objective_ = std::make_shared<LaplacianObjective>(setup_.topologies(), cfg.agent_dims[0],
                                                      cfg.objective.perturbation);
    std::vector<Eigen::VectorXd> initial(static_cast<std::size_t>(agents));
    for (int i = 0; i < agents; ++i) {
      RandomStream init_stream(setup_.seed, agent_label("init", i));
      initial[static_cast<std::size_t>(i)] =
          sample_annulus(cfg.agent_dims[static_cast<std::size_t>(i)], inner, outer, init_stream);
    }
    // Algorithm 1 line 2: initialization is a free lossless broadcast, so
    // every agent starts with everyone's initial estimate at stamp 0.
    const EstimateList shared = EstimateList::initial(initial);
    for (int i = 0; i < agents; ++i) {
      AgentState a;
      a.id = i;
      a.estimate = initial[static_cast<std::size_t>(i)];
      a.list = shared;
      a.clock = ClockSchedule(cfg.tick_ratios.ratios[static_cast<std::size_t>(i)].first,
                              cfg.tick_ratios.ratios[static_cast<std::size_t>(i)].second);
      agents_.push_back(std::move(a));
    }
    production_ticks_.assign(static_cast<std::size_t>(agents), {});
  } else {
    consensus_ = cfg.objective.instance;
    if (!consensus_) throw ConfigError("consensus mode: no quadratic instance resolved");
    const int d = cfg.consensus_dim;
    layout_ = DimensionLayout::uniform(1, d);
    RandomStream init_stream(setup_.seed, "init/solution");
    const Eigen::VectorXd x0 = sample_annulus(d, inner, outer, init_stream);
    // Slot 0: solution estimate (producer = arbiter). Slots 1..D: local
    // gradients, synchronized to the common initial point.
    std::vector<Eigen::VectorXd> slots;
    slots.push_back(x0);
    for (int j = 0; j < agents; ++j) slots.push_back(consensus_->local_gradient(j, x0));
    const EstimateList shared = EstimateList::initial(slots);
    for (int i = 0; i < agents; ++i) {
      AgentState a;
      a.id = i;
      a.estimate = x0;
      a.list = shared;
      a.clock = ClockSchedule(cfg.tick_ratios.ratios[static_cast<std::size_t>(i)].first,
                              cfg.tick_ratios.ratios[static_cast<std::size_t>(i)].second);
      agents_.push_back(std::move(a));
    }
    production_ticks_.assign(static_cast<std::size_t>(agents) + 1, {});
  }
}

void Simulation::set_update_order(std::vector<int> order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(agents_.size()); ++i)
    if (i >= static_cast<int>(sorted.size()) || sorted[static_cast<std::size_t>(i)] != i)
      throw ConfigError("update order must be a permutation of all agent ids");
  update_order_ = std::move(order);
}

int Simulation::slot_count() const { return agents_.front().list.size(); }

int Simulation::slot_producer(int slot) const {
  if (setup_.config.mode == Mode::Optimize) return slot;
  return slot == 0 ? 0 : slot - 1;
}

std::int64_t Simulation::nu(int agent) const {
  return agents_[static_cast<std::size_t>(agent)].update_count;
}

std::int64_t Simulation::estimate_age(int slot, int holder) const {
  const std::int64_t n = tick_count_ - 1;
  if (n < 0 || holder == slot_producer(slot)) return 0;
  const auto& e = agents_[static_cast<std::size_t>(holder)].list.entry(slot);
  return std::max<std::int64_t>(0, n - e.origin_tick);
}

std::int64_t Simulation::transmission_delay(int slot, int holder) const {
  const std::int64_t n = tick_count_ - 1;
  if (n < 0 || holder == slot_producer(slot)) return 0;
  const auto& e = agents_[static_cast<std::size_t>(holder)].list.entry(slot);
  const auto& prod = production_ticks_[static_cast<std::size_t>(slot)];
  if (static_cast<std::int64_t>(prod.size()) <= e.stamp) return 0;  // holds the newest
  // Stamp s+1 was produced at prod[s]; the held value was current up to
  // the tick just before that.
  const std::int64_t next_production = prod[static_cast<std::size_t>(e.stamp)];
  return std::max<std::int64_t>(0, n - next_production + 1);
}

Eigen::VectorXd Simulation::assemble_from_list(const EstimateList& list) const {
  Eigen::VectorXd x(layout_.total);
  for (int k = 0; k < layout_.agent_count(); ++k)
    x.segment(layout_.offsets[static_cast<std::size_t>(k)],
              layout_.dims[static_cast<std::size_t>(k)]) = list.entry(k).value;
  return x;
}

Eigen::VectorXd Simulation::assembled_estimate() const {
  if (setup_.config.mode == Mode::Consensus) return agents_.front().estimate;
  Eigen::VectorXd x(layout_.total);
  for (int k = 0; k < layout_.agent_count(); ++k)
    x.segment(layout_.offsets[static_cast<std::size_t>(k)],
              layout_.dims[static_cast<std::size_t>(k)]) =
        agents_[static_cast<std::size_t>(k)].estimate;
  return x;
}

double Simulation::objective_value() const {
  if (setup_.config.mode == Mode::Consensus)
    return consensus_->total_value(agents_.front().estimate);
  return objective_->expected_value(assembled_estimate(), setup_.switch_weights);
}

void Simulation::flush_inbox(AgentState& agent) {
  for (const auto& list : agent.inbox) agent.list.merge_from(list);
  agent.inbox.clear();
}

Eigen::VectorXd Simulation::bounded_noise(int agent_dim, RandomStream& stream) const {
  // Component-wise uniform in [-eps/sqrt(d), eps/sqrt(d)] keeps the norm
  // within the configured amplitude.
  const double bound = setup_.config.epsilon_noise / std::sqrt(static_cast<double>(agent_dim));
  Eigen::VectorXd noise(agent_dim);
  for (int i = 0; i < agent_dim; ++i) noise(i) = stream.uniform(-bound, bound);
  return noise;
}

void Simulation::check_guard(const AgentState& agent) {
  if (!diverged_ && agent.estimate.norm() > setup_.config.guard) {
    diverged_ = true;
    diverged_agent_ = agent.id;
  }
}

void Simulation::optimize_update(AgentState& agent, std::int64_t tick, int topology_sample,
                                 TickReport& report) {
  agent.update_count += 1;
  const std::int64_t s = agent.update_count;
  int xi = topology_sample;
  if (setup_.config.noise_mode == NoiseMode::PerAgent)
    xi = xi_streams_[static_cast<std::size_t>(agent.id)].categorical(setup_.switch_weights);
  report.xi_used[static_cast<std::size_t>(agent.id)] = xi;

  const Eigen::VectorXd full = assemble_from_list(agent.list);
  Eigen::VectorXd grad;
  if (setup_.config.gradient == GradientKind::Exact) {
    grad = objective_->block_gradient(full, xi, agent.id);
  } else {
    Eigen::VectorXd signs(layout_.total);
    auto& stream = spsa_streams_[static_cast<std::size_t>(agent.id)];
    for (Eigen::Index i = 0; i < signs.size(); ++i) signs(i) = stream.rademacher();
    grad = spsa_block_gradient(*objective_, full, xi, setup_.config.spsa_c, signs, agent.id);
  }

  Eigen::VectorXd next = agent.estimate - setup_.config.schedule(s) * grad;
  if (setup_.config.epsilon_noise > 0.0)
    next += bounded_noise(static_cast<int>(next.size()),
                          eps_streams_[static_cast<std::size_t>(agent.id)]);
  agent.estimate = std::move(next);
  agent.list.stamp_own(agent.id, agent.estimate, s, tick, tick);
  production_ticks_[static_cast<std::size_t>(agent.id)].push_back(tick);
  check_guard(agent);
}

void Simulation::consensus_update(AgentState& agent, std::int64_t tick) {
  // Algorithm 2 merges buffered arrivals at the local tick, not at every
  // network tick.
  flush_inbox(agent);
  agent.update_count += 1;
  const std::int64_t s = agent.update_count;
  const auto& quad = *consensus_;
  const int agents = static_cast<int>(agents_.size());

  if (agent.id == 0) {  // arbiter descent on the sum of cached gradients
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(quad.dimension());
    for (int j = 1; j <= agents; ++j) sum += agent.list.entry(j).value;
    Eigen::VectorXd next = agent.list.entry(0).value - setup_.config.schedule(s) * sum;
    agent.list.stamp_own(0, next, s, tick, tick);
    production_ticks_[0].push_back(tick);
    Eigen::VectorXd g = quad.local_gradient(0, next);
    agent.list.stamp_own(1, std::move(g), s, tick, tick);
    production_ticks_[1].push_back(tick);
    agent.estimate = std::move(next);
  } else {
    const auto& view = agent.list.entry(0);
    Eigen::VectorXd g = quad.local_gradient(agent.id, view.value);
    agent.list.stamp_own(1 + agent.id, std::move(g), s, tick, view.origin_tick);
    production_ticks_[static_cast<std::size_t>(1 + agent.id)].push_back(tick);
    agent.estimate = view.value;
  }
  check_guard(agent);
}

TickReport Simulation::advance_tick() {
  const std::int64_t n = tick_count_;
  const int agents = static_cast<int>(agents_.size());

  TickReport report;
  report.tick = n;
  report.active.assign(static_cast<std::size_t>(agents), false);
  report.xi_used.assign(static_cast<std::size_t>(agents), -1);

  // (1)-(2) network tick: sample the switching process.
  const int topology_sample = switch_stream_.categorical(setup_.switch_weights);
  report.topology = topology_sample;
  const Digraph& active_topology =
      setup_.topologies()[static_cast<std::size_t>(topology_sample)];

  // (3)-(4) one Markov step per channel, then transmissions along the
  // active out-edges; delivered snapshots arrive this tick (one hop per
  // tick). Inactive union edges fail with probability 1 without touching
  // the channel's random stream.
  for (std::size_t k = 0; k < channels_.size(); ++k) {
    const auto& [from, to] = union_edges_[k];
    auto& channel = channels_[k];
    ChannelOutcome outcome;
    outcome.from = from;
    outcome.to = to;
    outcome.state = channel.step_state();
    outcome.active = active_topology.has_edge(from, to);
    if (outcome.active) {
      ++report.messages_sent;
      outcome.delivered = channel.attempt_transmission();
      if (outcome.delivered) {
        ++report.messages_delivered;
        agents_[static_cast<std::size_t>(to)].inbox.push_back(
            agents_[static_cast<std::size_t>(from)].list);
      }
    }
    report.channels.push_back(outcome);
  }

  if (setup_.config.mode == Mode::Optimize) {
    // Algorithm 1 step 6 runs at every network tick on arrival.
    for (auto& agent : agents_) flush_inbox(agent);
  }

  // (5) local updates for the agents whose clocks ticked.
  for (int id : update_order_) {
    auto& agent = agents_[static_cast<std::size_t>(id)];
    if (!agent.clock.ticks_at(n)) continue;
    report.active[static_cast<std::size_t>(id)] = true;
    if (setup_.config.mode == Mode::Optimize)
      optimize_update(agent, n, topology_sample, report);
    else
      consensus_update(agent, n);
  }

  report.nu.resize(static_cast<std::size_t>(agents));
  for (int i = 0; i < agents; ++i) report.nu[static_cast<std::size_t>(i)] = nu(i);
  report.lambda = lambda_diagnostics(report.active, report.nu, setup_.config.schedule);

  tick_count_ = n + 1;
  return report;
}

}  // namespace netopt
