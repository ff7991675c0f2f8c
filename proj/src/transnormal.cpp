#include "coxinv/transnormal.hpp"

#include <algorithm>
#include <cmath>

namespace coxinv {

namespace {

enum Stream : std::uint64_t { kPairs = 201 };

constexpr double kRegularGate = 1e-4;

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Bracket coefficients c(k, p) of pair p = (i, j), i < j, in the gradient
// frame; also the worst out-of-span residual.
Eigen::MatrixXd bracket_coefficients(const SeparatingMap& f, const Point& x, const Eigen::MatrixXd& j,
                                     double& residual) {
  const std::size_t n = f.outputs.size();
  std::vector<Point> grads;
  std::vector<Eigen::MatrixXd> hess;
  for (const auto& o : f.outputs) {
    grads.push_back(o.gradient(x));
    hess.push_back(o.hessian(x));
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(j.transpose());
  Eigen::MatrixXd coeffs(n, n * (n - 1) / 2);
  std::size_t p = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b, ++p) {
      Point v = hess[b] * grads[a] - hess[a] * grads[b];
      Point c = qr.solve(v);
      residual = std::max(residual, (j.transpose() * c - v).norm() / (1 + v.norm()));
      coeffs.col(static_cast<Eigen::Index>(p)) = c;
    }
  return coeffs;
}

}  // namespace

Point gradient(const Invariant& f, const Point& x) { return f.gradient(x); }

Eigen::MatrixXd gram_matrix(const SeparatingMap& f, const Point& x) {
  Eigen::MatrixXd j = f.jacobian(x);
  return j * j.transpose();
}

std::size_t regular_rank(const SeparatingMap& f, const Point& x) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(f.jacobian(x));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) < 1e-300) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++r;
  return r;
}

Point bracket(const Invariant& fi, const Invariant& fj, const Point& x) {
  return fj.hessian(x) * fi.gradient(x) - fi.hessian(x) * fj.gradient(x);
}

TransnormalReport check_transnormal(const SeparatingMap& f, const CoxeterGroup& group, std::size_t pairs,
                                    double tol_gram, double tol_bracket, std::uint64_t seed) {
  TransnormalReport r;
  r.seed = seed;
  r.gram.pairs = pairs;
  r.gram.tolerance = tol_gram;
  r.bracket.tolerance = tol_bracket;
  r.laplacian.pairs = pairs;
  r.gram.min_rank = f.dim;

  for (std::size_t s = 0; s < pairs; ++s) {
    SampleRng rng(seed, kPairs, s);
    const Vector xv = group.random_point(rng, 1.0);
    const Isometry g = group.random_element(rng);
    const Point x = to_point(xv), gx = to_point(g.apply(xv));

    r.gram.level_deviation = std::max(r.gram.level_deviation, (f.evaluate(x) - f.evaluate(gx)).lpNorm<Eigen::Infinity>());
    const Eigen::MatrixXd jx = f.jacobian(x), jg = f.jacobian(gx);
    const Eigen::MatrixXd bx = jx * jx.transpose(), bg = jg * jg.transpose();
    const double d = max_abs(bx - bg);
    r.gram.gram_deviation_abs = std::max(r.gram.gram_deviation_abs, d);
    r.gram.gram_deviation = std::max(r.gram.gram_deviation, d / (1 + max_abs(bx)));
    const std::size_t rk = regular_rank(f, x);
    r.gram.min_rank = std::min(r.gram.min_rank, rk);
    r.gram.max_rank = std::max(r.gram.max_rank, rk);

    for (const auto& o : f.outputs) {
      const double lx = o.laplacian(x), lg = o.laplacian(gx);
      r.laplacian.deviation = std::max(r.laplacian.deviation, std::abs(lx - lg) / (1 + std::abs(lx)));
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> sx(jx), sg(jg);
    const auto n = static_cast<Eigen::Index>(f.dim);
    if (jx.rows() != n || sx.singularValues().size() < n || sx.singularValues()(n - 1) <= kRegularGate ||
        sg.singularValues()(n - 1) <= kRegularGate)
      continue;
    ++r.bracket.regular_samples;
    double residual = 0;
    const Eigen::MatrixXd cx = bracket_coefficients(f, x, jx, residual);
    const Eigen::MatrixXd cg = bracket_coefficients(f, gx, jg, residual);
    r.bracket.max_residual = std::max(r.bracket.max_residual, residual);
    if (cx.size())
      r.bracket.coefficient_deviation =
          std::max(r.bracket.coefficient_deviation, max_abs(cx - cg) / (1 + max_abs(cx)));
  }
  r.gram.pass = r.gram.gram_deviation < tol_gram;
  r.bracket.pass = r.bracket.max_residual < tol_bracket && r.bracket.coefficient_deviation < tol_bracket;
  r.laplacian.pass = r.laplacian.deviation < tol_gram;
  return r;
}

}  // namespace coxinv
