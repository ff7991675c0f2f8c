#pragma once

#include "coxinv/invariants.hpp"
#include "coxinv/reflection_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coxinv {

/// F(x_0, x_1, ..., x_s) = (x_0, F_1(x_1), ..., F_s(x_s)).
///
/// Outputs are ambient-space invariants: first the coordinates of x along
/// the (pairwise orthogonal) basis of E_0, then each factor's generators in
/// component order.
struct SeparatingMap {
  std::size_t dim = 0;
  OrthogonalDecomposition decomposition;
  std::vector<GeneratorSystem> systems;  // per group component, unembedded
  std::vector<Invariant> outputs;
  /// Block of each output: 0 for E_0, c + 1 for group component c.
  std::vector<std::size_t> output_block;

  Point evaluate(const Point& x) const;
  /// Rows are output gradients.
  Eigen::MatrixXd jacobian(const Point& x) const;
};

/// Throws NotCrystallographic / IndependenceFailure from the factor builders.
SeparatingMap build_separating_map(const CoxeterGroup& group);

struct InvarianceReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  /// max over samples and generators of |F(gx) - F(x)|_inf / (1 + |F(x)|_inf)
  double max_deviation = 0;
  /// same, without the scale normalisation
  double max_abs_deviation = 0;
  bool pass = false;
};

/// Samples x uniformly in [-2, 2]^n and checks every group generator.
InvarianceReport check_invariance(const SeparatingMap& f, const CoxeterGroup& group, std::size_t samples,
                                  double tol = 1e-10, std::uint64_t seed = 0);

struct SeparationReport {
  std::size_t pairs = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  /// min |F(x) - F(y)| over distinct interior pairs
  double separation_min = 0;
  /// max |F(x) - F(gx)| over matched pairs, and whether the orbit oracle
  /// confirmed every match
  double matched_max = 0;
  bool matched_oracle = true;
  bool pass = false;
};

/// Distinct pairs are sampled in the open fundamental domain at distance
/// >= 1e-3 from the walls and more than min(10 tol, 1e-2) apart; matched pairs are
/// (x, g x) for random group elements g.
SeparationReport check_separation(const SeparatingMap& f, const CoxeterGroup& group, std::size_t pairs,
                                  double tol = 1e-6, std::uint64_t seed = 0);

}  // namespace coxinv
