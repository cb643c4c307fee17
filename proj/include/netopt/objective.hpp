#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "netopt/graph.hpp"
#include "netopt/rng.hpp"

namespace netopt {

/// How gradient noise is shared across agents: one realization per global
/// tick seen by every agent updating in that tick, or an independent draw
/// per agent.
enum class NoiseMode { Shared, PerAgent };

/// Per-agent block structure of the appended decision vector.
struct DimensionLayout {
  std::vector<int> dims;
  std::vector<int> offsets;
  int total = 0;

  static DimensionLayout from_dims(const std::vector<int>& dims);
  static DimensionLayout uniform(int agents, int dim_each);
  int agent_count() const { return static_cast<int>(dims.size()); }
  Eigen::VectorXd block(const Eigen::VectorXd& x, int agent) const;
};

/// Sampled objective f(x, xi) with a categorical noise space
/// xi in {0..cardinality-1} and exact per-agent block gradients.
class StochasticObjective {
public:
  virtual ~StochasticObjective() = default;

  virtual const DimensionLayout& layout() const = 0;
  virtual int noise_cardinality() const = 0;

  virtual double value(const Eigen::VectorXd& x, int xi) const = 0;

  /// Exact partial gradient of f(., xi) in the block of `agent`.
  virtual Eigen::VectorXd block_gradient(const Eigen::VectorXd& x, int xi,
                                         int agent) const = 0;

  Eigen::VectorXd full_gradient(const Eigen::VectorXd& x, int xi) const;

  /// E_xi f(x, xi) under the given categorical law.
  double expected_value(const Eigen::VectorXd& x, const std::vector<double>& weights) const;
};

/// The perturbed average-network-distance objective
/// f(x, xi) = x^T [L_xi + perturbation*I] x over the switching topologies.
/// Positive definite for perturbation > 0; the unique minimizer of the
/// expectation is the origin. Requires a uniform per-agent dimension.
class LaplacianObjective : public StochasticObjective {
public:
  LaplacianObjective(std::vector<Digraph> topologies, int agent_dim,
                     double perturbation = 0.1);

  const DimensionLayout& layout() const override { return layout_; }
  int noise_cardinality() const override { return static_cast<int>(supports_.size()); }
  double value(const Eigen::VectorXd& x, int xi) const override;
  Eigen::VectorXd block_gradient(const Eigen::VectorXd& x, int xi, int agent) const override;

  double perturbation() const { return perturbation_; }
  /// Dense matrix L_xi (+ perturbation) acting on the appended vector;
  /// the algebraic route used to cross-check the stencil evaluators.
  Eigen::MatrixXd quadratic_matrix(int xi) const;

private:
  std::vector<Digraph> supports_;  // undirected supports of the topologies
  DimensionLayout layout_;
  int agent_dim_;
  double perturbation_;
};

/// Per-agent quadratics f_i(x) = x^T A_i x + b_i^T x + c_i with symmetric
/// positive definite A_i (validated at load).
class ConsensusQuadratics {
public:
  ConsensusQuadratics(std::vector<Eigen::MatrixXd> a, std::vector<Eigen::VectorXd> b,
                      std::vector<double> c);

  int agent_count() const { return static_cast<int>(a_.size()); }
  int dimension() const { return static_cast<int>(b_.front().size()); }

  double local_value(int agent, const Eigen::VectorXd& x) const;
  Eigen::VectorXd local_gradient(int agent, const Eigen::VectorXd& x) const;
  double total_value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd total_gradient(const Eigen::VectorXd& x) const;

  /// x* = -(1/2) (sum A_i)^{-1} sum b_i, the unique minimizer of sum f_i.
  Eigen::VectorXd analytic_solution() const;

  const Eigen::MatrixXd& a(int agent) const { return a_[static_cast<std::size_t>(agent)]; }
  const Eigen::VectorXd& b(int agent) const { return b_[static_cast<std::size_t>(agent)]; }
  double c(int agent) const { return c_[static_cast<std::size_t>(agent)]; }

  /// A_i = M^T M / d + 0.1 I with M entries iid standard normal,
  /// b_i and c_i uniform in [-1, 1].
  static ConsensusQuadratics generate(int agents, int dim, RandomStream& stream);

private:
  std::vector<Eigen::MatrixXd> a_;
  std::vector<Eigen::VectorXd> b_;
  std::vector<double> c_;
};

/// SPSA-C simultaneous-perturbation gradient estimate:
///   g_i = (f(x + c*signs, xi) - f(x - c*signs, xi)) / (2 c signs_i)
/// with signs a +-1 Rademacher vector. Exact for linear objectives; the
/// mean over sign patterns of a smooth objective is off by O(c^2).
Eigen::VectorXd spsa_gradient(const StochasticObjective& obj, const Eigen::VectorXd& x,
                              int xi, double c, const Eigen::VectorXd& signs);

/// Block restriction of the same two-evaluation estimate.
Eigen::VectorXd spsa_block_gradient(const StochasticObjective& obj, const Eigen::VectorXd& x,
                                    int xi, double c, const Eigen::VectorXd& signs, int agent);

}  // namespace netopt
