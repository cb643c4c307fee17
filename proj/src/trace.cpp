#include "netopt/trace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "netopt/errors.hpp"

namespace netopt {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(line);
  while (std::getline(in, token, sep)) out.push_back(token);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string Trace::header_line() const {
  std::string h = "tick,topology,ymask";
  for (int i = 1; i <= meta.agents; ++i) h += ",nu_" + std::to_string(i);
  for (int i = 1; i <= meta.agents; ++i) h += ",q_" + std::to_string(i);
  for (int i = 1; i <= meta.agents; ++i) h += ",norm_" + std::to_string(i);
  if (meta.full_estimates) {
    int total = 0;
    for (int d : meta.dims) total += d;
    if (meta.mode == "consensus") total = meta.dims.front() * meta.agents;
    for (int k = 1; k <= total; ++k) h += ",x_" + std::to_string(k);
  }
  h += ",F,dist,max_delay,mean_delay";
  for (const auto& [slot, holder] : meta.delay_pairs)
    h += ",age_" + std::to_string(slot) + "_" + std::to_string(holder + 1);
  return h;
}

void Trace::write_csv(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  char hash_hex[24];
  std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                static_cast<unsigned long long>(meta.config_hash));
  out << "# netopt-trace v=1 config_hash=" << hash_hex << " seed=" << meta.seed
      << " mode=" << meta.mode << " agents=" << meta.agents
      << " dims=" << join_ints(meta.dims, ';') << " horizon=" << meta.horizon
      << " rho_min=" << format_double(meta.rho_min)
      << " F0=" << format_double(meta.initial_objective)
      << " dist0=" << format_double(meta.initial_distance)
      << " full=" << (meta.full_estimates ? 1 : 0) << " pairs=";
  for (std::size_t i = 0; i < meta.delay_pairs.size(); ++i) {
    if (i) out << ';';
    out << meta.delay_pairs[i].first << ':' << meta.delay_pairs[i].second;
  }
  out << "\n" << header_line() << "\n";
  for (const auto& row : rows) {
    out << row.tick << ',' << row.topology << ',';
    for (bool b : row.active) out << (b ? '1' : '0');
    for (auto v : row.nu) out << ',' << v;
    for (double v : row.q) out << ',' << format_double(v);
    for (double v : row.norms) out << ',' << format_double(v);
    if (meta.full_estimates)
      for (double v : row.estimates) out << ',' << format_double(v);
    out << ',' << format_double(row.objective) << ',' << format_double(row.distance)
        << ',' << format_double(row.max_delay) << ',' << format_double(row.mean_delay);
    for (auto v : row.delays) out << ',' << v;
    out << '\n';
  }
}

Trace Trace::read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read trace file: " + path);
  Trace trace;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# netopt-trace", 0) != 0)
    throw std::runtime_error(path + ": not a netopt trace (missing metadata line)");

  for (const auto& token : split(line.substr(2), ' ')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "config_hash")
      trace.meta.config_hash = std::stoull(value, nullptr, 16);
    else if (key == "seed")
      trace.meta.seed = std::stoull(value);
    else if (key == "mode")
      trace.meta.mode = value;
    else if (key == "agents")
      trace.meta.agents = std::stoi(value);
    else if (key == "dims")
      for (const auto& d : split(value, ';')) trace.meta.dims.push_back(std::stoi(d));
    else if (key == "horizon")
      trace.meta.horizon = std::stoll(value);
    else if (key == "rho_min")
      trace.meta.rho_min = std::stod(value);
    else if (key == "F0")
      trace.meta.initial_objective = std::stod(value);
    else if (key == "dist0")
      trace.meta.initial_distance = std::stod(value);
    else if (key == "full")
      trace.meta.full_estimates = value == "1";
    else if (key == "pairs" && !value.empty())
      for (const auto& p : split(value, ';')) {
        const auto colon = p.find(':');
        trace.meta.delay_pairs.emplace_back(std::stoi(p.substr(0, colon)),
                                            std::stoi(p.substr(colon + 1)));
      }
  }

  if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header line");
  if (line != trace.header_line())
    throw std::runtime_error(path + ": header does not match the trace metadata");

  const int agents = trace.meta.agents;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    std::size_t at = 0;
    auto next = [&]() -> const std::string& {
      if (at >= cells.size()) throw std::runtime_error(path + ": truncated trace row");
      return cells[at++];
    };
    TraceRow row;
    row.tick = std::stoll(next());
    row.topology = std::stoi(next());
    const std::string& mask = next();
    if (static_cast<int>(mask.size()) != agents)
      throw std::runtime_error(path + ": ymask width does not match the agent count");
    for (char c : mask) row.active.push_back(c == '1');
    for (int i = 0; i < agents; ++i) row.nu.push_back(std::stoll(next()));
    for (int i = 0; i < agents; ++i) row.q.push_back(std::stod(next()));
    for (int i = 0; i < agents; ++i) row.norms.push_back(std::stod(next()));
    if (trace.meta.full_estimates) {
      int total = 0;
      for (int d : trace.meta.dims) total += d;
      if (trace.meta.mode == "consensus") total = trace.meta.dims.front() * agents;
      for (int k = 0; k < total; ++k) row.estimates.push_back(std::stod(next()));
    }
    row.objective = std::stod(next());
    row.distance = std::stod(next());
    row.max_delay = std::stod(next());
    row.mean_delay = std::stod(next());
    for (std::size_t k = 0; k < trace.meta.delay_pairs.size(); ++k)
      row.delays.push_back(std::stoll(next()));
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

}  // namespace netopt
