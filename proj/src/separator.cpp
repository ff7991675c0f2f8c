#include "coxinv/separator.hpp"

#include "coxinv/errors.hpp"

#include <algorithm>
#include <cmath>

namespace coxinv {

namespace {

enum Stream : std::uint64_t { kInvariance = 101, kDistinct = 102, kMatched = 103 };

}  // namespace

Point SeparatingMap::evaluate(const Point& x) const {
  Point y(static_cast<Eigen::Index>(outputs.size()));
  for (std::size_t i = 0; i < outputs.size(); ++i) y(static_cast<Eigen::Index>(i)) = outputs[i].value(x);
  return y;
}

Eigen::MatrixXd SeparatingMap::jacobian(const Point& x) const {
  Eigen::MatrixXd j(outputs.size(), x.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) j.row(static_cast<Eigen::Index>(i)) = outputs[i].gradient(x).transpose();
  return j;
}

SeparatingMap build_separating_map(const CoxeterGroup& group) {
  SeparatingMap f;
  f.dim = group.dim();
  f.decomposition = decompose(group.linear_generators(), group.dim());
  for (const auto& b : f.decomposition.fixed_basis) {
    f.outputs.emplace_back(Polynomial::linear_form(b));
    f.output_block.push_back(0);
  }
  for (std::size_t c = 0; c < group.components().size(); ++c) {
    const auto& comp = group.components()[c];
    GeneratorSystem sys =
        comp.affine ? real_generators(group.affine_group(c)) : chevalley_generators(group.finite_group(c));
    for (const auto& g : sys.generators) {
      f.outputs.push_back(g.embed(comp.offset, f.dim));
      f.output_block.push_back(c + 1);
    }
    f.systems.push_back(std::move(sys));
  }
  if (f.outputs.size() != f.dim)
    throw Error("separating map has " + std::to_string(f.outputs.size()) + " outputs in dimension " +
                std::to_string(f.dim));
  return f;
}

InvarianceReport check_invariance(const SeparatingMap& f, const CoxeterGroup& group, std::size_t samples, double tol,
                                  std::uint64_t seed) {
  InvarianceReport r;
  r.samples = samples;
  r.seed = seed;
  r.tolerance = tol;
  const auto& gens = group.generators();
  for (std::size_t s = 0; s < samples; ++s) {
    SampleRng rng(seed, kInvariance, s);
    const Vector x = group.random_point(rng, 2.0);
    const Point fx = f.evaluate(to_point(x));
    const double scale = 1 + fx.lpNorm<Eigen::Infinity>();
    for (const auto& g : gens) {
      const double d = (f.evaluate(to_point(g.apply(x))) - fx).lpNorm<Eigen::Infinity>();
      r.max_abs_deviation = std::max(r.max_abs_deviation, d);
      r.max_deviation = std::max(r.max_deviation, d / scale);
    }
  }
  r.pass = r.max_deviation < tol;
  return r;
}

SeparationReport check_separation(const SeparatingMap& f, const CoxeterGroup& group, std::size_t pairs, double tol,
                                  std::uint64_t seed) {
  SeparationReport r;
  r.pairs = pairs;
  r.seed = seed;
  r.tolerance = tol;
  r.separation_min = pairs ? std::numeric_limits<double>::infinity() : 0.0;
  const double apart = std::min(10 * tol, 1e-2);
  for (std::size_t s = 0; s < pairs; ++s) {
    SampleRng rng(seed, kDistinct, s);
    Vector x = group.random_interior_point(rng);
    Vector y = group.random_interior_point(rng);
    while ((to_point(x) - to_point(y)).norm() <= apart) y = group.random_interior_point(rng);
    const double d = (f.evaluate(to_point(x)) - f.evaluate(to_point(y))).norm();
    r.separation_min = std::min(r.separation_min, d);

    SampleRng mrng(seed, kMatched, s);
    const Isometry g = group.random_element(mrng);
    const Vector gx = g.apply(x);
    r.matched_max = std::max(r.matched_max, (f.evaluate(to_point(x)) - f.evaluate(to_point(gx))).norm());
    if (!group.orbit_equal(x, gx, 1e-9)) r.matched_oracle = false;
  }
  r.pass = r.separation_min > tol && r.matched_max < tol && r.matched_oracle;
  return r;
}

}  // namespace coxinv
