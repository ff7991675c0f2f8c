#pragma once

#include "coxinv/separator.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace coxinv {

/// lambda(F(x)) dF_{i_1} ^ ... ^ dF_{i_k}; lambda is a polynomial in the
/// output coordinates of F.
struct FormTerm {
  std::vector<std::size_t> indices;
  Polynomial coefficient;
};

class InvariantForm {
 public:
  InvariantForm(std::shared_ptr<const SeparatingMap> map, std::size_t degree, std::vector<FormTerm> terms);

  std::size_t degree() const { return degree_; }
  const std::vector<FormTerm>& terms() const { return terms_; }
  const SeparatingMap& map() const { return *map_; }

  /// sum lambda(F(x)) det[<dF_{i_a}(x), v_b>]; needs exactly degree() vectors.
  double evaluate(const Point& x, const std::vector<Point>& vectors) const;

 private:
  std::shared_ptr<const SeparatingMap> map_;
  std::size_t degree_;
  std::vector<FormTerm> terms_;
  std::vector<Invariant> coefficients_;
};

/// Throws BadIndexTuple for tuples that are not strictly increasing, have
/// the wrong length, or leave the output range, and for coefficients over
/// the wrong number of variables.
InvariantForm build_form(std::shared_ptr<const SeparatingMap> map, std::size_t degree, std::vector<FormTerm> terms);

/// Single term lambda = 1 over all outputs: the Jacobian determinant form.
InvariantForm jacobian_form(std::shared_ptr<const SeparatingMap> map);

/// max over seeded points x in [-1, 1]^n and frames v_b in [-1, 1]^n of
/// |omega(gx; Lv_1, ..., Lv_k) - omega(x; v_1, ..., v_k)|, L = linear part of g.
double pullback_deviation(const InvariantForm& form, const Isometry& g, std::size_t samples, std::uint64_t seed = 0);

}  // namespace coxinv
