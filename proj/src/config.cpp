#include "netopt/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "netopt/errors.hpp"

namespace netopt {

using nlohmann::json;

namespace {

json digraph_to_json(const Digraph& g) {
  json edges = json::array();
  for (const auto& [from, to] : g.edges()) edges.push_back({from + 1, to + 1});
  return edges;
}

Digraph digraph_from_json(int vertex_count, const json& edges, const std::string& where) {
  Digraph g(vertex_count);
  if (!edges.is_array()) throw ConfigError(where + ": expected an edge array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2)
      throw ConfigError(where + ": each edge must be a [from, to] pair");
    const int from = e[0].get<int>(), to = e[1].get<int>();
    if (from < 1 || from > vertex_count || to < 1 || to > vertex_count)
      throw ConfigError(where + ": agent ids are 1-based in 1.." +
                        std::to_string(vertex_count));
    if (from == to) throw ConfigError(where + ": self-loop " + std::to_string(from));
    g.add_edge(from - 1, to - 1);
  }
  return g;
}

Eigen::MatrixXd matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ConfigError(where + ": expected a matrix");
  const auto rows = j.size();
  const auto cols = j[0].size();
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ConfigError(where + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::VectorXd vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

ChannelParams channel_params_from_json(const json& j, const std::string& where) {
  ChannelParams p;
  if (!j.contains("transition") || !j.contains("crossover"))
    throw ConfigError(where + ": needs 'transition' and 'crossover'");
  p.transition = matrix_from_json(j.at("transition"), where + ".transition");
  p.crossover = vector_from_json(j.at("crossover"), where + ".crossover");
  p.validate();
  return p;
}

json channel_params_to_json(const ChannelParams& p, int initial_state) {
  return json{{"transition", matrix_to_json(p.transition)},
              {"crossover", vector_to_json(p.crossover)},
              {"initial_state", initial_state}};
}

json schedule_to_json(const StepSizeSchedule& s);
StepSizeSchedule schedule_from_json(const json& j);

ConsensusQuadratics instance_from_json(const json& j) {
  std::vector<Eigen::MatrixXd> a;
  std::vector<Eigen::VectorXd> b;
  std::vector<double> c;
  for (const auto& m : j.at("a")) a.push_back(matrix_from_json(m, "objective.instance.a"));
  for (const auto& v : j.at("b")) b.push_back(vector_from_json(v, "objective.instance.b"));
  for (const auto& x : j.at("c")) c.push_back(x.get<double>());
  return {std::move(a), std::move(b), std::move(c)};
}

json instance_to_json(const ConsensusQuadratics& q) {
  json a = json::array(), b = json::array(), c = json::array();
  for (int i = 0; i < q.agent_count(); ++i) {
    a.push_back(matrix_to_json(q.a(i)));
    b.push_back(vector_to_json(q.b(i)));
    c.push_back(q.c(i));
  }
  return json{{"a", std::move(a)}, {"b", std::move(b)}, {"c", std::move(c)}};
}

json schedule_to_json(const StepSizeSchedule& s) {
  switch (s.family()) {
    case StepSizeSchedule::Family::ReciprocalAffine:
      return json{{"family", "reciprocal-affine"}, {"alpha", s.alpha()}, {"beta", s.beta()}};
    case StepSizeSchedule::Family::Power:
      return json{{"family", "power"}, {"scale", s.scale()}, {"exponent", s.exponent()}};
    case StepSizeSchedule::Family::Constant:
      return json{{"family", "constant"}, {"value", s.value()}};
    case StepSizeSchedule::Family::Table:
      return json{{"family", "table"}, {"values", s.values()}};
  }
  throw ConfigError("schedule: unknown family");
}

StepSizeSchedule schedule_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "reciprocal-affine")
    return StepSizeSchedule::reciprocal_affine(j.at("alpha").get<double>(),
                                               j.at("beta").get<double>());
  if (family == "power")
    return StepSizeSchedule::power(j.at("scale").get<double>(),
                                   j.at("exponent").get<double>());
  if (family == "constant") return StepSizeSchedule::constant(j.at("value").get<double>());
  if (family == "table") return StepSizeSchedule::table(j.at("values").get<std::vector<double>>());
  throw ConfigError("schedule.family: unknown family '" + family + "'");
}

}  // namespace

void SimConfig::validate() const {
  if (version != 1) throw ConfigError("version: only schema version 1 is supported");
  if (agent_count < 1) throw ConfigError("agents: must be >= 1");
  if (horizon < 1) throw ConfigError("horizon: must be >= 1");
  if (!seed_set) throw ConfigError("seed: mandatory (runs never use wall-clock entropy)");
  if (!(guard > 0.0)) throw ConfigError("guard: must be > 0");
  if (mode == Mode::Optimize) {
    if (static_cast<int>(agent_dims.size()) != agent_count)
      throw ConfigError("dims: need one dimension per agent");
    for (int d : agent_dims)
      if (d < 1) throw ConfigError("dims: agent dimensions must be >= 1");
    if (objective.kind != ObjectiveSpec::Kind::Laplacian)
      throw ConfigError("objective: optimize mode expects the laplacian objective");
    for (std::size_t i = 1; i < agent_dims.size(); ++i)
      if (agent_dims[i] != agent_dims[0])
        throw ConfigError("dims: the laplacian objective needs a uniform agent dimension");
  } else {
    if (consensus_dim < 1) throw ConfigError("dim: must be >= 1 in consensus mode");
    if (objective.kind != ObjectiveSpec::Kind::ConsensusQuadratics)
      throw ConfigError("objective: consensus mode expects consensus-quadratics");
    if (objective.instance) {
      if (objective.instance->agent_count() != agent_count)
        throw ConfigError("objective.instance: agent count mismatch");
      if (objective.instance->dimension() != consensus_dim)
        throw ConfigError("objective.instance: dimension mismatch");
    }
  }
  if (!topologies.generated()) {
    if (topologies.graphs.empty()) throw ConfigError("topologies: need at least one");
    for (const auto& g : topologies.graphs)
      if (g.vertex_count() != agent_count)
        throw ConfigError("topologies: vertex count must equal the agent count");
  } else {
    if (topologies.generate_count < 1 || topologies.generate_edges < 1)
      throw ConfigError("topologies.generate: count and edges must be >= 1");
    const int max_edges = agent_count * (agent_count - 1);
    if (topologies.generate_edges > max_edges)
      throw ConfigError("topologies.generate: more edges than ordered pairs");
  }
  if (!switch_weights.empty()) {
    const std::size_t n = topologies.generated()
                              ? static_cast<std::size_t>(topologies.generate_count)
                              : topologies.graphs.size();
    if (switch_weights.size() != n)
      throw ConfigError("switching.weights: need one weight per topology");
    double total = 0.0;
    for (double w : switch_weights) {
      if (w < 0.0) throw ConfigError("switching.weights: weights must be >= 0");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw ConfigError("switching.weights: must sum to 1");
  }
  channels.default_params.validate();
  if (channels.default_initial_state < 0 ||
      channels.default_initial_state >= channels.default_params.state_count())
    throw ConfigError("channels.default.initial_state: out of range");
  for (const auto& o : channels.overrides) {
    o.params.validate();
    if (o.from < 0 || o.from >= agent_count || o.to < 0 || o.to >= agent_count)
      throw ConfigError("channels.overrides: edge endpoint out of range");
    if (o.initial_state < 0 || o.initial_state >= o.params.state_count())
      throw ConfigError("channels.overrides: initial_state out of range");
  }
  if (!tick_ratios.sampled()) {
    if (static_cast<int>(tick_ratios.ratios.size()) != agent_count)
      throw ConfigError("tick_ratios: need one ratio per agent");
    for (const auto& [a, b] : tick_ratios.ratios)
      if (a < 1 || b < 1 || a > b)
        throw ConfigError("tick_ratios: each ratio a/b needs 1 <= a <= b");
  } else {
    const auto& t = tick_ratios;
    if (t.sample_denominator < 1 || t.sample_min_numer < 1 ||
        t.sample_max_numer > t.sample_denominator ||
        t.sample_min_numer > t.sample_max_numer)
      throw ConfigError("tick_ratios.sample: need 1 <= min <= max <= denominator");
  }
  if (gradient == GradientKind::Spsa && !(spsa_c > 0.0))
    throw ConfigError("gradient.c: SPSA perturbation must be > 0");
  if (epsilon_noise < 0.0) throw ConfigError("epsilon_noise: must be >= 0");
  if (init.kind == InitSpec::Kind::Annulus) {
    if (!(init.inner >= 0.0) || !(init.outer >= init.inner) || !(init.outer > 0.0))
      throw ConfigError("init.annulus: need 0 <= inner <= outer, outer > 0");
  } else if (!(init.outer > 0.0)) {
    throw ConfigError("init.ball: radius must be > 0");
  }
  if (!(verify.eta > 0.5 && verify.eta < 1.0))
    throw ConfigError("verify.eta: must lie in (1/2, 1)");
}

SimConfig SimConfig::from_json(const json& j) {
  SimConfig cfg;
  cfg.version = j.value("version", 1);
  const std::string mode = j.value("mode", "optimize");
  if (mode == "optimize")
    cfg.mode = Mode::Optimize;
  else if (mode == "consensus")
    cfg.mode = Mode::Consensus;
  else
    throw ConfigError("mode: expected 'optimize' or 'consensus'");
  cfg.agent_count = j.at("agents").get<int>();
  if (cfg.agent_count < 1) throw ConfigError("agents: must be >= 1");

  if (cfg.mode == Mode::Optimize) {
    if (!j.contains("dims")) throw ConfigError("dims: required in optimize mode");
    const auto& dims = j.at("dims");
    if (dims.is_number_integer())
      cfg.agent_dims.assign(static_cast<std::size_t>(cfg.agent_count), dims.get<int>());
    else
      cfg.agent_dims = dims.get<std::vector<int>>();
  } else {
    cfg.consensus_dim = j.at("dim").get<int>();
  }

  const auto& topo = j.at("topologies");
  if (topo.is_object() && topo.contains("generate")) {
    cfg.topologies.generate_count = topo.at("generate").at("count").get<int>();
    cfg.topologies.generate_edges = topo.at("generate").at("edges").get<int>();
  } else if (topo.is_array()) {
    for (std::size_t k = 0; k < topo.size(); ++k)
      cfg.topologies.graphs.push_back(digraph_from_json(
          cfg.agent_count, topo[k], "topologies[" + std::to_string(k) + "]"));
  } else {
    throw ConfigError("topologies: expected an array of edge lists or {generate:{...}}");
  }

  if (j.contains("switching")) {
    const auto& sw = j.at("switching");
    if (sw.is_string()) {
      if (sw.get<std::string>() != "uniform")
        throw ConfigError("switching: unknown law '" + sw.get<std::string>() + "'");
    } else if (sw.is_object() && sw.contains("weights")) {
      cfg.switch_weights = sw.at("weights").get<std::vector<double>>();
    } else {
      throw ConfigError("switching: expected 'uniform' or {weights:[...]}");
    }
  }

  if (j.contains("channels")) {
    const auto& ch = j.at("channels");
    if (ch.contains("default")) {
      cfg.channels.default_params = channel_params_from_json(ch.at("default"), "channels.default");
      cfg.channels.default_initial_state = ch.at("default").value("initial_state", 0);
    }
    if (ch.contains("overrides")) {
      for (const auto& o : ch.at("overrides")) {
        ChannelOverride over;
        const auto& e = o.at("edge");
        over.from = e[0].get<int>() - 1;
        over.to = e[1].get<int>() - 1;
        over.params = channel_params_from_json(o, "channels.overrides");
        over.initial_state = o.value("initial_state", 0);
        cfg.channels.overrides.push_back(std::move(over));
      }
    }
  }

  if (j.contains("tick_ratios")) {
    const auto& t = j.at("tick_ratios");
    if (t.is_array()) {
      for (const auto& r : t.at(0).is_array() ? t : json::array({t}))
        cfg.tick_ratios.ratios.emplace_back(r[0].get<int>(), r[1].get<int>());
    } else if (t.is_object() && t.contains("sample")) {
      cfg.tick_ratios.sample_min_numer = t.at("sample").value("min_numer", 12);
      cfg.tick_ratios.sample_max_numer = t.at("sample").value("max_numer", 60);
      cfg.tick_ratios.sample_denominator = t.at("sample").value("denominator", 60);
    } else if (t.is_object() && t.contains("all")) {
      const auto& r = t.at("all");
      cfg.tick_ratios.ratios.assign(static_cast<std::size_t>(cfg.agent_count),
                                    {r[0].get<int>(), r[1].get<int>()});
    } else {
      throw ConfigError("tick_ratios: expected an array, {sample:{...}} or {all:[a,b]}");
    }
  } else {
    cfg.tick_ratios.ratios.assign(static_cast<std::size_t>(cfg.agent_count), {1, 1});
  }

  if (j.contains("schedule")) cfg.schedule = schedule_from_json(j.at("schedule"));

  if (j.contains("objective")) {
    const auto& obj = j.at("objective");
    const std::string kind = obj.value("kind", "laplacian");
    if (kind == "laplacian") {
      cfg.objective.kind = ObjectiveSpec::Kind::Laplacian;
      cfg.objective.perturbation = obj.value("perturbation", 0.1);
    } else if (kind == "consensus-quadratics") {
      cfg.objective.kind = ObjectiveSpec::Kind::ConsensusQuadratics;
      if (obj.contains("instance")) cfg.objective.instance = instance_from_json(obj.at("instance"));
    } else {
      throw ConfigError("objective.kind: unknown kind '" + kind + "'");
    }
  } else if (cfg.mode == Mode::Consensus) {
    cfg.objective.kind = ObjectiveSpec::Kind::ConsensusQuadratics;
  }

  if (j.contains("gradient")) {
    const std::string kind = j.at("gradient").value("kind", "exact");
    if (kind == "exact") {
      cfg.gradient = GradientKind::Exact;
    } else if (kind == "spsa") {
      cfg.gradient = GradientKind::Spsa;
      cfg.spsa_c = j.at("gradient").value("c", 0.01);
    } else {
      throw ConfigError("gradient.kind: expected 'exact' or 'spsa'");
    }
  }

  const std::string noise = j.value("noise_mode", "shared");
  if (noise == "shared")
    cfg.noise_mode = NoiseMode::Shared;
  else if (noise == "per-agent")
    cfg.noise_mode = NoiseMode::PerAgent;
  else
    throw ConfigError("noise_mode: expected 'shared' or 'per-agent'");

  cfg.epsilon_noise = j.value("epsilon_noise", 0.0);

  const std::string cp = j.value("cp", "every-tick");
  if (cp != "every-tick")
    throw ConfigError("cp: only the every-tick communication protocol is implemented "
                      "(got '" + cp + "')");

  if (j.contains("init")) {
    const auto& init = j.at("init");
    if (init.contains("annulus")) {
      cfg.init.kind = InitSpec::Kind::Annulus;
      cfg.init.inner = init.at("annulus")[0].get<double>();
      cfg.init.outer = init.at("annulus")[1].get<double>();
    } else if (init.contains("ball")) {
      cfg.init.kind = InitSpec::Kind::Ball;
      cfg.init.outer = init.at("ball").get<double>();
    } else {
      throw ConfigError("init: expected {annulus:[inner,outer]} or {ball:r}");
    }
  }

  cfg.horizon = j.at("horizon").get<std::int64_t>();
  if (j.contains("seed")) {
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.seed_set = true;
  }
  cfg.guard = j.value("guard", 1e9);

  if (j.contains("trace")) {
    const auto& t = j.at("trace");
    const std::string est = t.value("estimates", "full");
    if (est == "full")
      cfg.trace.estimates = EstimateTraceMode::Full;
    else if (est == "norms")
      cfg.trace.estimates = EstimateTraceMode::Norms;
    else
      throw ConfigError("trace.estimates: expected 'full' or 'norms'");
    if (t.contains("delays")) cfg.trace.delays = t.at("delays").get<bool>();
  }

  if (j.contains("verify")) {
    const auto& v = j.at("verify");
    cfg.verify.eta = v.value("eta", 0.75);
    if (v.contains("a4_floor") && !v.at("a4_floor").is_null())
      cfg.verify.a4_floor = v.at("a4_floor").get<double>();
    cfg.verify.schedule_horizon = v.value("schedule_horizon", std::int64_t{10000});
  }

  cfg.validate();
  return cfg;
}

SimConfig SimConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

json SimConfig::to_json() const {
  json j;
  j["version"] = version;
  j["mode"] = mode == Mode::Optimize ? "optimize" : "consensus";
  j["agents"] = agent_count;
  if (mode == Mode::Optimize)
    j["dims"] = agent_dims;
  else
    j["dim"] = consensus_dim;
  if (!topologies.generated()) {
    json topo = json::array();
    for (const auto& g : topologies.graphs) topo.push_back(digraph_to_json(g));
    j["topologies"] = std::move(topo);
  } else {
    j["topologies"] = {{"generate", {{"count", topologies.generate_count},
                                     {"edges", topologies.generate_edges}}}};
  }
  if (switch_weights.empty())
    j["switching"] = "uniform";
  else
    j["switching"] = {{"weights", switch_weights}};
  json ch;
  ch["default"] = channel_params_to_json(channels.default_params, channels.default_initial_state);
  if (!channels.overrides.empty()) {
    json overrides = json::array();
    for (const auto& o : channels.overrides) {
      json entry = channel_params_to_json(o.params, o.initial_state);
      entry["edge"] = {o.from + 1, o.to + 1};
      overrides.push_back(std::move(entry));
    }
    ch["overrides"] = std::move(overrides);
  }
  j["channels"] = std::move(ch);
  if (!tick_ratios.sampled()) {
    json ratios = json::array();
    for (const auto& [a, b] : tick_ratios.ratios) ratios.push_back({a, b});
    j["tick_ratios"] = std::move(ratios);
  } else {
    j["tick_ratios"] = {{"sample",
                         {{"min_numer", tick_ratios.sample_min_numer},
                          {"max_numer", tick_ratios.sample_max_numer},
                          {"denominator", tick_ratios.sample_denominator}}}};
  }
  j["schedule"] = schedule_to_json(schedule);
  if (objective.kind == ObjectiveSpec::Kind::Laplacian) {
    j["objective"] = {{"kind", "laplacian"}, {"perturbation", objective.perturbation}};
  } else {
    j["objective"] = {{"kind", "consensus-quadratics"}};
    if (objective.instance) j["objective"]["instance"] = instance_to_json(*objective.instance);
  }
  if (gradient == GradientKind::Exact)
    j["gradient"] = {{"kind", "exact"}};
  else
    j["gradient"] = {{"kind", "spsa"}, {"c", spsa_c}};
  j["noise_mode"] = noise_mode == NoiseMode::Shared ? "shared" : "per-agent";
  j["epsilon_noise"] = epsilon_noise;
  j["cp"] = "every-tick";
  if (init.kind == InitSpec::Kind::Annulus)
    j["init"] = {{"annulus", {init.inner, init.outer}}};
  else
    j["init"] = {{"ball", init.outer}};
  j["horizon"] = horizon;
  if (seed_set) j["seed"] = seed;
  j["guard"] = guard;
  j["trace"] = {{"estimates", trace.estimates == EstimateTraceMode::Full ? "full" : "norms"}};
  j["trace"]["delays"] = record_delays();
  j["verify"] = {{"eta", verify.eta}, {"schedule_horizon", verify.schedule_horizon}};
  if (verify.a4_floor) j["verify"]["a4_floor"] = *verify.a4_floor;
  return j;
}

namespace {

std::vector<Digraph> generate_topologies(int agents, int count, int edges,
                                         RandomStream& stream) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < agents; ++i)
    for (int j = 0; j < agents; ++j)
      if (i != j) pairs.emplace_back(i, j);

  constexpr int kMaxAttempts = 200000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Digraph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
      // Partial Fisher-Yates: the first `edges` entries are a uniform
      // sample without replacement.
      auto deck = pairs;
      Digraph g(agents);
      for (int e = 0; e < edges; ++e) {
        const auto pick = static_cast<std::size_t>(
            stream.uniform_int(e, static_cast<std::int64_t>(deck.size()) - 1));
        std::swap(deck[static_cast<std::size_t>(e)], deck[pick]);
        g.add_edge(deck[static_cast<std::size_t>(e)].first,
                   deck[static_cast<std::size_t>(e)].second);
      }
      graphs.push_back(std::move(g));
    }
    if (is_strongly_connected(union_graph(graphs))) return graphs;
  }
  throw ConfigError(
      "topologies.generate: could not reach a strongly connected union "
      "(too few edges for the agent count?)");
}

}  // namespace

ResolvedSetup ResolvedSetup::resolve(const SimConfig& raw, std::uint64_t replication_seed) {
  raw.validate();
  ResolvedSetup setup;
  setup.config = raw;
  setup.config.seed = replication_seed;
  setup.config.seed_set = true;
  setup.seed = replication_seed;

  if (raw.topologies.generated()) {
    RandomStream stream(replication_seed, "topology-gen");
    setup.config.topologies.graphs =
        generate_topologies(raw.agent_count, raw.topologies.generate_count,
                            raw.topologies.generate_edges, stream);
    setup.config.topologies.generate_count = 0;
    setup.config.topologies.generate_edges = 0;
  }

  if (raw.tick_ratios.sampled()) {
    RandomStream stream(replication_seed, "tick-ratio");
    auto& t = setup.config.tick_ratios;
    t.ratios.clear();
    for (int i = 0; i < raw.agent_count; ++i) {
      const int numer = static_cast<int>(stream.uniform_int(
          raw.tick_ratios.sample_min_numer, raw.tick_ratios.sample_max_numer));
      t.ratios.emplace_back(numer, raw.tick_ratios.sample_denominator);
    }
  }

  if (raw.mode == Mode::Consensus && !raw.objective.instance) {
    RandomStream stream(replication_seed, "instance");
    setup.config.objective.instance =
        ConsensusQuadratics::generate(raw.agent_count, raw.consensus_dim, stream);
  }

  setup.switch_weights = raw.switch_weights;
  if (setup.switch_weights.empty())
    setup.switch_weights.assign(setup.config.topologies.graphs.size(),
                                1.0 / static_cast<double>(setup.config.topologies.graphs.size()));

  setup.union_topology = union_graph(setup.config.topologies.graphs);
  for (const auto& [from, to] : setup.union_topology.edges()) {
    const ChannelOverride* match = nullptr;
    for (const auto& o : raw.channels.overrides)
      if (o.from == from && o.to == to) match = &o;
    setup.channel_params.push_back(match ? match->params : raw.channels.default_params);
    setup.channel_initial_states.push_back(match ? match->initial_state
                                                 : raw.channels.default_initial_state);
  }
  return setup;
}

DimensionLayout ResolvedSetup::layout() const {
  if (config.mode == Mode::Optimize) return DimensionLayout::from_dims(config.agent_dims);
  return DimensionLayout::uniform(1, config.consensus_dim);
}

double ResolvedSetup::rho_min() const {
  double best = 1.0;
  for (const auto& [a, b] : config.tick_ratios.ratios)
    best = std::min(best, static_cast<double>(a) / b);
  return best;
}

json ResolvedSetup::to_json() const {
  json j;
  j["config"] = config.to_json();
  j["seed"] = seed;
  j["switch_weights"] = switch_weights;
  json union_edges = digraph_to_json(union_topology);
  j["union_edges"] = std::move(union_edges);
  json channels = json::array();
  const auto edges = union_topology.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    json entry = channel_params_to_json(channel_params[k], channel_initial_states[k]);
    entry["edge"] = {edges[k].first + 1, edges[k].second + 1};
    channels.push_back(std::move(entry));
  }
  j["channels"] = std::move(channels);
  return j;
}

ResolvedSetup ResolvedSetup::from_json(const json& j) {
  SimConfig cfg = SimConfig::from_json(j.at("config"));
  if (cfg.topologies.generated() || cfg.tick_ratios.sampled())
    throw ConfigError("resolved setup: generators must already be expanded");
  return resolve(cfg, j.at("seed").get<std::uint64_t>());
}

std::uint64_t ResolvedSetup::config_hash() const {
  return fnv1a64(to_json().dump());
}

std::vector<std::string> preset_names() { return {"paper-sec5", "paper-sec6"}; }

SimConfig preset(const std::string& name) {
  if (name == "paper-sec5") {
    SimConfig cfg;
    cfg.mode = Mode::Optimize;
    cfg.agent_count = 16;
    cfg.agent_dims.assign(16, 2);
    cfg.topologies.generate_count = 4;
    cfg.topologies.generate_edges = 8;
    cfg.channels.default_params = ChannelParams::reference_good_bad();
    cfg.tick_ratios = {};  // sampled: numerator 12..60 over 60, i.e. U[1/5, 1]
    cfg.schedule = StepSizeSchedule::reciprocal_affine(50.0, 50.0);
    cfg.objective.kind = ObjectiveSpec::Kind::Laplacian;
    cfg.objective.perturbation = 0.1;
    cfg.init.kind = InitSpec::Kind::Annulus;
    cfg.init.inner = 500.0;
    cfg.init.outer = 1000.0;
    cfg.horizon = 5000;
    cfg.seed = 101;
    cfg.seed_set = true;
    cfg.trace.estimates = EstimateTraceMode::Full;
    cfg.trace.delays = false;
    return cfg;
  }
  if (name == "paper-sec6") {
    SimConfig cfg;
    cfg.mode = Mode::Consensus;
    cfg.agent_count = 16;
    cfg.consensus_dim = 32;
    cfg.topologies.generate_count = 4;
    cfg.topologies.generate_edges = 8;
    cfg.channels.default_params = ChannelParams::reference_good_bad();
    cfg.tick_ratios = {};
    cfg.schedule = StepSizeSchedule::reciprocal_affine(5.0, 150.0);
    cfg.objective.kind = ObjectiveSpec::Kind::ConsensusQuadratics;
    cfg.init.kind = InitSpec::Kind::Ball;
    cfg.init.outer = 10.0;
    cfg.horizon = 2500;
    cfg.seed = 202;
    cfg.seed_set = true;
    cfg.trace.estimates = EstimateTraceMode::Norms;
    cfg.trace.delays = false;
    return cfg;
  }
  throw ConfigError("unknown preset '" + name + "' (see `netopt presets list`)");
}

std::string preset_description(const std::string& name) {
  if (name == "paper-sec5")
    return "16 agents in R^2, 4 random 8-edge topologies (strongly connected union), "
           "Markov good/bad channels, tick-ratios ~ U[1/5,1], a(nu)=1/(nu/50+50), "
           "init annulus [500,1000], 5000 ticks, distributed descent";
  if (name == "paper-sec6")
    return "16 agents, common variable in R^32, random SPD quadratics, same network "
           "model, a(nu)=1/(nu/5+150), init ball radius 10, 2500 ticks, arbiter consensus";
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace netopt
