#pragma once

#include "coxinv/number.hpp"
#include "coxinv/reflection_group.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace coxinv {

using Point = Eigen::VectorXd;

Point to_point(const Vector& v);
Vector from_point(const Point& p);

/// Sparse multivariate polynomial with Scalar coefficients.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}
  static Polynomial constant(std::size_t variables, const Scalar& c);
  static Polynomial variable(std::size_t variables, std::size_t i);
  /// x -> <x, v>.
  static Polynomial linear_form(const Vector& v);

  std::size_t variables() const { return vars_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  /// Adds c * x^e; zero results are dropped.
  void add_term(const Exponent& e, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;
  bool exact() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& s) const;
  Polynomial pow(int k) const;

  /// p o g, i.e. x -> p(g x).
  Polynomial compose(const Isometry& g) const;
  /// The same polynomial in variables [offset, offset + n) of R^ambient.
  Polynomial embed(std::size_t offset, std::size_t ambient) const;
  /// Exact value at an exact point.
  Scalar evaluate(const Vector& x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t vars_;
  std::map<Exponent, Scalar> terms_;
};

/// x -> sum_gamma c_gamma exp(2 pi i gamma(x)), gamma in the weight lattice.
///
/// Weights are stored as integer coordinates over the fundamental weights
/// `weight_basis`.
class TrigInvariant {
 public:
  using Weight = std::vector<long long>;

  TrigInvariant() = default;
  TrigInvariant(std::vector<Vector> weight_basis, bool real);

  const std::vector<Vector>& weight_basis() const { return basis_; }
  const std::map<Weight, std::complex<double>>& terms() const { return terms_; }
  void add_term(const Weight& w, std::complex<double> c);
  void erase_term(const Weight& w) { terms_.erase(w); }
  std::size_t dim() const { return basis_.empty() ? 0 : basis_.front().size(); }

  /// Declared real-valued; see conjugate_symmetric().
  bool real() const { return real_; }
  /// Whether c_{-gamma} = conj(c_gamma) within tol for every stored weight.
  bool conjugate_symmetric(double tol = 1e-14) const;

  /// Real and imaginary parts as realness-flagged invariants.
  TrigInvariant real_part() const;
  TrigInvariant imag_part() const;

  std::complex<double> evaluate(const Point& x) const;
  TrigInvariant embed(std::size_t offset, std::size_t ambient) const;

 private:
  std::vector<Vector> basis_;
  std::map<Weight, std::complex<double>> terms_;
  bool real_ = false;
};

/// A real-valued invariant function: a polynomial or a real trig sum, with
/// analytic derivatives.
class Invariant {
 public:
  Invariant(Polynomial p);
  Invariant(TrigInvariant t);

  bool is_polynomial() const { return std::holds_alternative<Polynomial>(fn_); }
  const Polynomial& polynomial() const { return std::get<Polynomial>(fn_); }
  const TrigInvariant& trig() const { return std::get<TrigInvariant>(fn_); }
  std::size_t dim() const { return dim_; }

  double value(const Point& x) const;
  Point gradient(const Point& x) const;
  Eigen::MatrixXd hessian(const Point& x) const;
  double laplacian(const Point& x) const;

  Invariant embed(std::size_t offset, std::size_t ambient) const;

 private:
  struct Monomial {
    double coef;
    std::vector<int> exp;
  };
  struct Wave {
    std::complex<double> coef;
    Point frequency;  // 2 pi * gamma as an ambient vector
  };
  void compile();

  std::variant<Polynomial, TrigInvariant> fn_;
  std::size_t dim_ = 0;
  int max_exp_ = 0;
  std::vector<Monomial> monomials_;
  std::vector<Wave> waves_;
};

/// Bookkeeping for one generator of a system.
struct GeneratorInfo {
  int degree = 0;          // polynomial degree (finite factors)
  int weight_index = -1;   // fundamental weight gamma_i averaged (affine factors)
  std::string part;        // "real", "re" or "im" (affine factors)
};

struct GeneratorSystem {
  std::string label;
  bool affine = false;
  std::vector<Invariant> generators;
  std::vector<GeneratorInfo> info;
  /// Point at which the Jacobian certificate is evaluated.
  Point designated_point;
  /// Rank and determinant of the Jacobian restricted to the factor's span.
  std::size_t jacobian_rank = 0;
  double jacobian_det = 0;
  /// Affine factors: the involution rho (0-based) and the split p + 2q = n.
  std::vector<int> involution;
  int p = 0, q = 0;

  std::vector<int> degrees() const;
};

/// |W|^-1 sum_w p o w. Throws NotFinite for affine input.
Polynomial reynolds(const Polynomial& p, const FiniteCoxeterGroup& group);
Polynomial reynolds(const Polynomial& p, const AffineWeylGroup& group);

/// Normalised sum of fundamental weights (finite) or rho / (2 <rho, theta>)
/// (affine): interior of the fundamental chamber / alcove.
Vector designated_point(const RootSystem& rs, bool affine);

/// Rank-many homogeneous invariants found by degree search over Reynolds
/// images of power sums; Jacobian certificate at the designated point.
/// Throws IndependenceFailure if the search bound is exhausted.
GeneratorSystem chevalley_generators(const FiniteCoxeterGroup& group);

/// S(e^{2 pi i gamma}) for gamma in weight coordinates.
/// Throws NotCrystallographic.
TrigInvariant averaging_operator(const TrigInvariant::Weight& gamma, const AffineWeylGroup& group);
/// Same, for gamma given as an ambient vector. Throws WeightNotInLattice.
TrigInvariant averaging_operator(const Vector& gamma, const AffineWeylGroup& group);

/// rho with -gamma_i in W(gamma_rho(i)); 0-based. Throws InvolutionNotFound.
std::vector<int> weight_involution(const AffineWeylGroup& group);

/// Real generators y_1..y_n from the averaged fundamental weights.
GeneratorSystem real_generators(const AffineWeylGroup& group);

/// Jacobian rank/determinant of `gens` at x, restricted to span(basis).
void jacobian_certificate(const std::vector<Invariant>& gens, const std::vector<Vector>& basis, const Point& x,
                          std::size_t& rank, double& det);

}  // namespace coxinv
