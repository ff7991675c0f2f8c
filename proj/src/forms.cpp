#include "coxinv/forms.hpp"

#include "coxinv/errors.hpp"
#include "coxinv/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coxinv {

namespace {

enum Stream : std::uint64_t { kForms = 301 };

Point random_cube(SampleRng& rng, std::size_t n) {
  Point p(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = rng.uniform(-1, 1);
  return p;
}

}  // namespace

InvariantForm::InvariantForm(std::shared_ptr<const SeparatingMap> map, std::size_t degree, std::vector<FormTerm> terms)
    : map_(std::move(map)), degree_(degree), terms_(std::move(terms)) {
  const std::size_t outputs = map_->outputs.size();
  for (const auto& t : terms_) {
    if (t.indices.size() != degree_) throw BadIndexTuple("index tuple length differs from the form degree");
    for (std::size_t a = 0; a < t.indices.size(); ++a) {
      if (t.indices[a] >= outputs) throw BadIndexTuple("index " + std::to_string(t.indices[a]) + " is out of range");
      if (a > 0 && t.indices[a] <= t.indices[a - 1]) throw BadIndexTuple("index tuple is not strictly increasing");
    }
    if (t.coefficient.variables() != outputs)
      throw BadIndexTuple("coefficient must be a polynomial in the " + std::to_string(outputs) + " output variables");
    coefficients_.emplace_back(t.coefficient);
  }
}

double InvariantForm::evaluate(const Point& x, const std::vector<Point>& vectors) const {
  if (vectors.size() != degree_) throw Error("form of degree " + std::to_string(degree_) + " needs as many vectors");
  // Evaluate on the vectors in a canonical order and apply the permutation
  // sign, so that the result is alternating bit for bit.
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(vectors[a].begin(), vectors[a].end(), vectors[b].begin(), vectors[b].end());
  };
  int sign = 1;
  for (std::size_t i = 1; i < order.size(); ++i)
    for (std::size_t k = i; k > 0 && less(order[k], order[k - 1]); --k) {
      std::swap(order[k], order[k - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < order.size(); ++i)
    if (vectors[order[i]] == vectors[order[i - 1]]) return 0.0;

  const Point fx = map_->evaluate(x);
  const Eigen::MatrixXd j = map_->jacobian(x);
  double s = 0;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto k = static_cast<Eigen::Index>(degree_);
    Eigen::MatrixXd m(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b)
        m(a, b) = j.row(static_cast<Eigen::Index>(terms_[t].indices[static_cast<std::size_t>(a)]))
                      .dot(vectors[order[static_cast<std::size_t>(b)]]);
    const double det = k == 0 ? 1.0 : m.determinant();
    s += coefficients_[t].value(fx) * det;
  }
  return sign * s;
}

InvariantForm build_form(std::shared_ptr<const SeparatingMap> map, std::size_t degree, std::vector<FormTerm> terms) {
  return InvariantForm(std::move(map), degree, std::move(terms));
}

InvariantForm jacobian_form(std::shared_ptr<const SeparatingMap> map) {
  const std::size_t n = map->outputs.size();
  FormTerm t;
  for (std::size_t i = 0; i < n; ++i) t.indices.push_back(i);
  t.coefficient = Polynomial::constant(n, Scalar(1));
  return InvariantForm(std::move(map), n, {t});
}

double pullback_deviation(const InvariantForm& form, const Isometry& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = form.map().dim;
  Eigen::MatrixXd l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g.linear(i, j).to_double();
  double worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    SampleRng rng(seed, kForms, s);
    const Point x = random_cube(rng, n);
    std::vector<Point> vs, gvs;
    for (std::size_t b = 0; b < form.degree(); ++b) {
      vs.push_back(random_cube(rng, n));
      gvs.push_back(l * vs.back());
    }
    const Point gx = to_point(g.apply(from_point(x)));
    worst = std::max(worst, std::abs(form.evaluate(gx, gvs) - form.evaluate(x, vs)));
  }
  return worst;
}

}  // namespace coxinv
