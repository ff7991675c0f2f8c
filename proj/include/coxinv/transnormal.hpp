#pragma once

#include "coxinv/separator.hpp"

#include <cstdint>
#include <vector>

namespace coxinv {

Point gradient(const Invariant& f, const Point& x);

/// b_ij(x) = <grad f_i(x), grad f_j(x)>.
Eigen::MatrixXd gram_matrix(const SeparatingMap& f, const Point& x);

/// Numerical rank of dF(x); singular values below 1e-9 of the largest are
/// zero (and all are zero when the largest is below 1e-300).
std::size_t regular_rank(const SeparatingMap& f, const Point& x);

struct GramReport {
  std::size_t pairs = 0;
  double tolerance = 0;
  /// max |b_ij(x) - b_ij(gx)| / (1 + max |b_ij(x)|)
  double gram_deviation = 0;
  double gram_deviation_abs = 0;
  /// max |F(x) - F(gx)|_inf over the pairs
  double level_deviation = 0;
  std::size_t min_rank = 0, max_rank = 0;
  bool pass = false;
};

struct BracketReport {
  /// samples passing the regularity gate (smallest singular value > 1e-4)
  std::size_t regular_samples = 0;
  double tolerance = 0;
  /// max over regular samples and i < j of the component of
  /// [grad f_i, grad f_j] orthogonal to the gradients, over 1 + its norm
  double max_residual = 0;
  /// max over regular orbit pairs of the change of the bracket coefficients
  /// in the gradient frame, over 1 + their max
  double coefficient_deviation = 0;
  bool pass = false;
};

struct LaplacianReport {
  std::size_t pairs = 0;
  /// max |Lap f_i(x) - Lap f_i(gx)| / (1 + |Lap f_i(x)|)
  double deviation = 0;
  bool pass = false;
};

struct TransnormalReport {
  std::uint64_t seed = 0;
  GramReport gram;
  BracketReport bracket;
  LaplacianReport laplacian;
};

/// [grad f_i, grad f_j](x) = Hess f_j grad f_i - Hess f_i grad f_j.
Point bracket(const Invariant& fi, const Invariant& fj, const Point& x);

/// Samples x uniformly in [-1, 1]^n paired with g x for random elements g.
TransnormalReport check_transnormal(const SeparatingMap& f, const CoxeterGroup& group, std::size_t pairs,
                                    double tol_gram = 1e-8, double tol_bracket = 1e-8, std::uint64_t seed = 0);

}  // namespace coxinv
