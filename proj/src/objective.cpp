#include "netopt/objective.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "netopt/errors.hpp"

namespace netopt {

DimensionLayout DimensionLayout::from_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw ConfigError("dimension layout: needs at least one agent");
  DimensionLayout layout;
  layout.dims = dims;
  layout.offsets.reserve(dims.size());
  for (int d : dims) {
    if (d < 1) throw ConfigError("dimension layout: agent dimensions must be >= 1");
    layout.offsets.push_back(layout.total);
    layout.total += d;
  }
  return layout;
}

DimensionLayout DimensionLayout::uniform(int agents, int dim_each) {
  return from_dims(std::vector<int>(static_cast<std::size_t>(agents), dim_each));
}

Eigen::VectorXd DimensionLayout::block(const Eigen::VectorXd& x, int agent) const {
  return x.segment(offsets[static_cast<std::size_t>(agent)],
                   dims[static_cast<std::size_t>(agent)]);
}

Eigen::VectorXd StochasticObjective::full_gradient(const Eigen::VectorXd& x, int xi) const {
  Eigen::VectorXd g(layout().total);
  for (int i = 0; i < layout().agent_count(); ++i)
    g.segment(layout().offsets[static_cast<std::size_t>(i)],
              layout().dims[static_cast<std::size_t>(i)]) = block_gradient(x, xi, i);
  return g;
}

double StochasticObjective::expected_value(const Eigen::VectorXd& x,
                                           const std::vector<double>& weights) const {
  if (static_cast<int>(weights.size()) != noise_cardinality())
    throw ConfigError("expected_value: weight count does not match the noise space");
  double total_weight = 0.0, acc = 0.0;
  for (int k = 0; k < noise_cardinality(); ++k) {
    acc += weights[static_cast<std::size_t>(k)] * value(x, k);
    total_weight += weights[static_cast<std::size_t>(k)];
  }
  return acc / total_weight;
}

LaplacianObjective::LaplacianObjective(std::vector<Digraph> topologies, int agent_dim,
                                       double perturbation)
    : layout_(DimensionLayout::uniform(
          topologies.empty() ? 0 : topologies.front().vertex_count(), agent_dim)),
      agent_dim_(agent_dim),
      perturbation_(perturbation) {
  if (topologies.empty()) throw ConfigError("laplacian objective: needs >= 1 topology");
  if (!(perturbation > 0.0))
    throw ConfigError("laplacian objective: perturbation must be > 0");
  supports_.reserve(topologies.size());
  for (const auto& g : topologies) {
    if (g.vertex_count() != topologies.front().vertex_count())
      throw ConfigError("laplacian objective: topology vertex counts differ");
    supports_.push_back(g.undirected_support());
  }
}

double LaplacianObjective::value(const Eigen::VectorXd& x, int xi) const {
  if (x.size() != layout_.total) throw ConfigError("laplacian objective: bad x dimension");
  if (xi < 0 || xi >= noise_cardinality())
    throw ConfigError("laplacian objective: xi out of range");
  const auto& g = supports_[static_cast<std::size_t>(xi)];
  double acc = perturbation_ * x.squaredNorm();
  for (const auto& [from, to] : g.edges())
    if (from < to)
      acc += (layout_.block(x, from) - layout_.block(x, to)).squaredNorm();
  return acc;
}

Eigen::VectorXd LaplacianObjective::block_gradient(const Eigen::VectorXd& x, int xi,
                                                   int agent) const {
  if (x.size() != layout_.total) throw ConfigError("laplacian objective: bad x dimension");
  if (xi < 0 || xi >= noise_cardinality())
    throw ConfigError("laplacian objective: xi out of range");
  const auto& g = supports_[static_cast<std::size_t>(xi)];
  const Eigen::VectorXd xi_block = layout_.block(x, agent);
  Eigen::VectorXd grad = perturbation_ * xi_block;
  for (int j : g.out_neighbors(agent)) grad += xi_block - layout_.block(x, j);
  return 2.0 * grad;
}

Eigen::MatrixXd LaplacianObjective::quadratic_matrix(int xi) const {
  return laplacian(supports_[static_cast<std::size_t>(xi)], agent_dim_) +
         perturbation_ * Eigen::MatrixXd::Identity(layout_.total, layout_.total);
}

ConsensusQuadratics::ConsensusQuadratics(std::vector<Eigen::MatrixXd> a,
                                         std::vector<Eigen::VectorXd> b,
                                         std::vector<double> c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.empty() || a_.size() != b_.size() || a_.size() != c_.size())
    throw ConfigError("consensus quadratics: A, b, c counts must match and be >= 1");
  const auto d = b_.front().size();
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].rows() != d || a_[i].cols() != d || b_[i].size() != d)
      throw ConfigError("consensus quadratics: inconsistent dimensions");
    if (!a_[i].isApprox(a_[i].transpose(), 1e-10))
      throw ConfigError("consensus quadratics: A_" + std::to_string(i + 1) +
                        " is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a_[i]);
    if (eig.eigenvalues().minCoeff() <= 0.0)
      throw ConfigError("consensus quadratics: A_" + std::to_string(i + 1) +
                        " is not positive definite");
  }
}

double ConsensusQuadratics::local_value(int agent, const Eigen::VectorXd& x) const {
  const auto i = static_cast<std::size_t>(agent);
  return x.dot(a_[i] * x) + b_[i].dot(x) + c_[i];
}

Eigen::VectorXd ConsensusQuadratics::local_gradient(int agent, const Eigen::VectorXd& x) const {
  const auto i = static_cast<std::size_t>(agent);
  return 2.0 * (a_[i] * x) + b_[i];
}

double ConsensusQuadratics::total_value(const Eigen::VectorXd& x) const {
  double acc = 0.0;
  for (int i = 0; i < agent_count(); ++i) acc += local_value(i, x);
  return acc;
}

Eigen::VectorXd ConsensusQuadratics::total_gradient(const Eigen::VectorXd& x) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(dimension());
  for (int i = 0; i < agent_count(); ++i) g += local_gradient(i, x);
  return g;
}

Eigen::VectorXd ConsensusQuadratics::analytic_solution() const {
  Eigen::MatrixXd a_sum = Eigen::MatrixXd::Zero(dimension(), dimension());
  Eigen::VectorXd b_sum = Eigen::VectorXd::Zero(dimension());
  for (int i = 0; i < agent_count(); ++i) {
    a_sum += a_[static_cast<std::size_t>(i)];
    b_sum += b_[static_cast<std::size_t>(i)];
  }
  return a_sum.ldlt().solve(-0.5 * b_sum);
}

ConsensusQuadratics ConsensusQuadratics::generate(int agents, int dim, RandomStream& stream) {
  if (agents < 1 || dim < 1)
    throw ConfigError("consensus quadratics: agents and dim must be >= 1");
  std::vector<Eigen::MatrixXd> a;
  std::vector<Eigen::VectorXd> b;
  std::vector<double> c;
  for (int i = 0; i < agents; ++i) {
    Eigen::MatrixXd m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int s = 0; s < dim; ++s) m(r, s) = stream.normal();
    a.push_back(m.transpose() * m / static_cast<double>(dim) +
                0.1 * Eigen::MatrixXd::Identity(dim, dim));
    Eigen::VectorXd v(dim);
    for (int r = 0; r < dim; ++r) v(r) = stream.uniform(-1.0, 1.0);
    b.push_back(v);
    c.push_back(stream.uniform(-1.0, 1.0));
  }
  return {std::move(a), std::move(b), std::move(c)};
}

Eigen::VectorXd spsa_gradient(const StochasticObjective& obj, const Eigen::VectorXd& x,
                              int xi, double c, const Eigen::VectorXd& signs) {
  if (!(c > 0.0)) throw ConfigError("spsa: perturbation c must be > 0");
  if (signs.size() != x.size()) throw ConfigError("spsa: sign vector dimension mismatch");
  for (Eigen::Index i = 0; i < signs.size(); ++i)
    if (signs(i) != 1.0 && signs(i) != -1.0)
      throw ConfigError("spsa: sign entries must be +1 or -1");
  const double diff = obj.value(x + c * signs, xi) - obj.value(x - c * signs, xi);
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) g(i) = diff / (2.0 * c * signs(i));
  return g;
}

Eigen::VectorXd spsa_block_gradient(const StochasticObjective& obj, const Eigen::VectorXd& x,
                                    int xi, double c, const Eigen::VectorXd& signs,
                                    int agent) {
  if (!(c > 0.0)) throw ConfigError("spsa: perturbation c must be > 0");
  if (signs.size() != x.size()) throw ConfigError("spsa: sign vector dimension mismatch");
  const double diff = obj.value(x + c * signs, xi) - obj.value(x - c * signs, xi);
  const auto& layout = obj.layout();
  const int offset = layout.offsets[static_cast<std::size_t>(agent)];
  const int dim = layout.dims[static_cast<std::size_t>(agent)];
  Eigen::VectorXd g(dim);
  for (int i = 0; i < dim; ++i) g(i) = diff / (2.0 * c * signs(offset + i));
  return g;
}

}  // namespace netopt
