#pragma once

#include "coxinv/number.hpp"
#include "coxinv/random.hpp"
#include "coxinv/root_system.hpp"

#include <memory>
#include <string>
#include <vector>

namespace coxinv {

/// x -> linear * x + translation.
struct Isometry {
  Matrix linear;
  Vector translation;

  static Isometry identity(std::size_t n);
  std::size_t dim() const { return translation.size(); }

  Vector apply(const Vector& x) const;
  Vector apply_linear(const Vector& v) const { return linear * v; }
  /// (*this) o other: first other, then *this.
  Isometry compose(const Isometry& other) const;
  Isometry inverse() const;
  bool is_orthogonal(double tol = 1e-12) const;
  /// Places the isometry on coordinates [offset, offset + dim) of R^ambient.
  Isometry embed(std::size_t offset, std::size_t ambient) const;

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }
};

/// Affine reflection x -> x - (<x, root> - offset) * coroot, fixing
/// {x : <x, root> = offset}. Throws ZeroVector.
Isometry reflection_in(const Vector& root, const Scalar& offset = Scalar(0));

/// Result of folding a point into the fundamental chamber or alcove.
///
/// The map from x to point is: subtract the lattice vector sum_i shift[i] *
/// coroot_i (affine groups only), then apply the generators of `word` in
/// order. Words are not canonical; only `point` is contract-bearing.
struct FoldResult {
  Vector point;
  std::vector<int> word;
  std::vector<long long> shift;
};

/// Finite reflection group W(rs) acting linearly on R^ambient.
class FiniteCoxeterGroup {
 public:
  explicit FiniteCoxeterGroup(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dim() const { return rs_.ambient_dim(); }
  /// Simple reflections.
  const std::vector<Isometry>& generators() const { return generators_; }

  /// Enumerated on first use, then cached; safe to call concurrently.
  const std::vector<Isometry>& elements() const;
  std::size_t order() const { return elements().size(); }

  /// Repeatedly reflects in the lowest-index violated simple wall until x is
  /// in the closed dominant chamber {<x, alpha_i> >= 0}.
  FoldResult fold(const Vector& x) const;

 private:
  struct Cache;
  RootSystem rs_;
  std::vector<Isometry> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Element of an affine Weyl group stored as (linear part, coroot coordinates).
struct AffineElement {
  Matrix linear;
  std::vector<long long> lattice;
};

/// Affine Weyl group W ⋉ Γ with Γ the coroot lattice.
class AffineWeylGroup {
 public:
  /// Throws NotCrystallographic.
  explicit AffineWeylGroup(RootSystem rs);

  const FiniteCoxeterGroup& finite_part() const { return finite_; }
  const RootSystem& root_system() const { return finite_.root_system(); }
  std::size_t dim() const { return finite_.dim(); }
  const Lattice& translation_lattice() const { return coroot_lattice_; }
  const Lattice& weight_lattice() const { return weight_lattice_; }
  /// Simple reflections followed by the reflection in {<x, highest root> = 1}.
  const std::vector<Isometry>& generators() const { return generators_; }

  /// x -> w x + sum_i lattice[i] * coroot_i.
  Isometry element(const Matrix& linear, const std::vector<long long>& lattice) const;
  /// Inverse of element(); throws Error if g is not in the group.
  AffineElement factor(const Isometry& g) const;
  /// Coordinates over the coroot basis; throws Error if v is not in Γ.
  std::vector<long long> lattice_coordinates(const Vector& v) const;
  Vector lattice_vector(const std::vector<long long>& coords) const;

  /// Reduces modulo Γ by rounding the fundamental-weight pairings, then
  /// reflects in the lowest-index violated alcove wall.
  FoldResult fold(const Vector& x) const;

 private:
  FiniteCoxeterGroup finite_;
  Lattice coroot_lattice_;
  Lattice weight_lattice_;
  std::vector<Isometry> generators_;
};

std::vector<Isometry> enumerate(const FiniteCoxeterGroup& group);
/// Always throws NotFinite.
std::vector<Isometry> enumerate(const AffineWeylGroup& group);

FoldResult fold_to_chamber(const FiniteCoxeterGroup& group, const Vector& x);
/// Throws NotCrystallographic for non-crystallographic finite parts.
FoldResult fold_to_alcove(const AffineWeylGroup& group, const Vector& x);

bool orbit_equal(const FiniteCoxeterGroup& group, const Vector& x, const Vector& y, double tol = 0);
bool orbit_equal(const AffineWeylGroup& group, const Vector& x, const Vector& y, double tol = 0);

// ---------------------------------------------------------------------------

struct DecompositionFactor {
  /// Pairwise orthogonal basis of E_i (exact when the input is exact).
  std::vector<Vector> basis;
  /// Indices of the generating reflections acting on E_i.
  std::vector<std::size_t> generators;
  /// Coxeter matrix m_ij of those generators.
  std::vector<std::vector<int>> coxeter_matrix;
  /// Coxeter type of the component, e.g. "A2", "B3", "I2(5)"; "?" if not
  /// recognised. B_n and C_n have the same Coxeter graph and report "B".
  std::string label;
};

struct OrthogonalDecomposition {
  std::size_t ambient_dim = 0;
  /// Pairwise orthogonal basis of the common fixed space E_0.
  std::vector<Vector> fixed_basis;
  std::vector<DecompositionFactor> factors;
};

/// Splits R^n along the connected components of the Coxeter graph of the
/// given linear reflections. Throws NotReflections.
OrthogonalDecomposition decompose(const std::vector<Isometry>& generators, std::size_t ambient_dim);

/// Max over generators and subspaces of the residual of "g preserves E_i and
/// fixes E_0 pointwise"; zero for exact input.
Scalar decomposition_residual(const OrthogonalDecomposition& d, const std::vector<Isometry>& generators);

/// Unit-length copies of a pairwise orthogonal basis.
std::vector<std::vector<double>> orthonormal(const std::vector<Vector>& orthogonal_basis);

// ---------------------------------------------------------------------------

/// One irreducible factor of a product group, placed on a coordinate block.
struct GroupComponent {
  RootSystem root_system;
  bool affine = false;
  std::size_t offset = 0;
};

/// Direct product of finite and affine irreducible reflection groups acting
/// on orthogonal coordinate blocks, padded with trivially acted-on
/// coordinates at the end.
class CoxeterGroup {
 public:
  struct Factor {
    RootSystem root_system;
    bool affine = false;
  };

  CoxeterGroup(const std::vector<Factor>& factors, std::size_t trivial_dims);
  static CoxeterGroup finite(RootSystem rs) { return CoxeterGroup({{std::move(rs), false}}, 0); }
  static CoxeterGroup affine(RootSystem rs) { return CoxeterGroup({{std::move(rs), true}}, 0); }
  static CoxeterGroup trivial(std::size_t dim) { return CoxeterGroup({}, dim); }

  std::size_t dim() const { return dim_; }
  std::size_t trivial_dims() const { return trivial_dims_; }
  const std::vector<GroupComponent>& components() const { return components_; }
  bool is_finite() const;

  const FiniteCoxeterGroup& finite_group(std::size_t component) const;
  /// Throws Error if the component is not affine.
  const AffineWeylGroup& affine_group(std::size_t component) const;

  /// All generators embedded in R^dim, component by component.
  const std::vector<Isometry>& generators() const { return generators_; }
  /// Owning component of each generator.
  const std::vector<std::size_t>& generator_component() const { return generator_component_; }
  /// Linear simple reflections only (affine reflections excluded).
  std::vector<Isometry> linear_generators() const;

  Vector block(const Vector& x, std::size_t component) const;
  Vector fold(const Vector& x) const;
  bool orbit_equal(const Vector& x, const Vector& y, double tol = 0) const;

  /// Product of the finite (linear) parts' orders.
  std::size_t finite_order() const;

  /// Random element: a random enumerated linear part per component and, for
  /// affine components, a random lattice translation with coordinates in
  /// [-lattice_radius, lattice_radius].
  Isometry random_element(SampleRng& rng, int lattice_radius = 2) const;
  /// Uniform point in the cube [-scale, scale]^dim.
  Vector random_point(SampleRng& rng, double scale = 1.0) const;
  /// Point of the open fundamental domain at distance >= wall_floor from
  /// every wall; E_0 coordinates uniform in [-1, 1].
  Vector random_interior_point(SampleRng& rng, double wall_floor = 1e-3) const;

  /// Signed distances to the walls of the fundamental domain (all positive
  /// in the interior).
  std::vector<double> wall_distances(const Vector& x) const;

 private:
  std::size_t dim_ = 0;
  std::size_t trivial_dims_ = 0;
  std::vector<GroupComponent> components_;
  std::vector<std::shared_ptr<const FiniteCoxeterGroup>> finite_;
  std::vector<std::shared_ptr<const AffineWeylGroup>> affine_;
  std::vector<Isometry> generators_;
  std::vector<std::size_t> generator_component_;
};

bool orbit_equal(const CoxeterGroup& group, const Vector& x, const Vector& y, double tol = 0);

}  // namespace coxinv
