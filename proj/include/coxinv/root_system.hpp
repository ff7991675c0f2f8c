#pragma once

#include "coxinv/number.hpp"

#include <string>
#include <utility>
#include <vector>

namespace coxinv {

enum class RootType { A, B, C, D, E, F, G, I2 };

/// Root data for one irreducible type, in the conventional integer-coordinate
/// embeddings (Bourbaki planches). Immutable after construction.
///
/// The Cartan matrix follows cartan(i, j) = <coroot_i, alpha_j>.
class RootSystem {
 public:
  RootType type() const { return type_; }
  int rank() const { return rank_; }
  /// Only meaningful for I2(m).
  int dihedral_order() const { return m_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::string label() const;

  /// Exact root data. False only for I2(m) with m outside {2, 3, 4, 6}.
  bool crystallographic() const { return crystallographic_; }

  const std::vector<Vector>& simple_roots() const { return simple_; }
  const std::vector<Vector>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Vector>& positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives.
  std::vector<Vector> roots() const;
  const Matrix& cartan_matrix() const { return cartan_; }

  /// Highest root (crystallographic only).
  const Vector& highest_root() const;

  /// Coordinates of v (in the span of the simple roots) over the simple roots.
  Vector simple_coordinates(const Vector& v) const;

  /// Classical degrees of the basic invariants; their product is |W|.
  std::vector<int> classified_degrees() const;
  std::size_t classified_order() const;

  friend RootSystem build_root_system(RootType type, int rank, int m);
  friend RootSystem root_system_from_simple_roots(RootType type, int rank, int m,
                                                  std::vector<Vector> simple);

 private:
  RootSystem() = default;
  void complete();

  RootType type_ = RootType::A;
  int rank_ = 0;
  int m_ = 0;
  std::size_t ambient_dim_ = 0;
  bool crystallographic_ = true;
  std::vector<Vector> simple_;
  std::vector<Vector> simple_coroots_;
  std::vector<Vector> positive_;
  Matrix cartan_;
  Vector highest_;
};

/// Builds the root system of the given classification entry. `m` is the
/// dihedral parameter for I2 and ignored otherwise. Throws
/// InvalidClassification for invalid (type, rank) pairs.
RootSystem build_root_system(RootType type, int rank, int m = 0);

/// Rebuilds a root system from stored simple roots (used by JSON import).
RootSystem root_system_from_simple_roots(RootType type, int rank, int m, std::vector<Vector> simple);

RootType parse_root_type(const std::string& s);
std::string to_string(RootType t);

/// 2 root / |root|^2. Throws ZeroVector.
Vector coroot_of(const Vector& root);

/// Fundamental weights inside span(simple roots): <gamma_i, coroot_j> = delta_ij.
/// Throws SingularGram when the simple roots are dependent.
std::vector<Vector> fundamental_weights(const RootSystem& rs);
std::vector<Vector> fundamental_weights(const std::vector<Vector>& simple_roots);

enum class LatticeKind { Coroot, Weight };

struct Lattice {
  std::vector<Vector> basis;
  LatticeKind kind = LatticeKind::Coroot;
};

/// Coroot lattice (translations) and its dual weight lattice.
std::pair<Lattice, Lattice> lattices(const RootSystem& rs);

/// Invariant factors of the Cartan matrix, i.e. the elementary divisors of
/// the root lattice inside the weight lattice. Their product is the index.
std::vector<BigInt> weight_lattice_invariants(const RootSystem& rs);

}  // namespace coxinv
