#pragma once

#include "coxinv/number.hpp"
#include "coxinv/reflection_group.hpp"

#include <optional>
#include <vector>

namespace coxinv {

/// {x : <x, normal> = offset}.
///
/// Canonical form: exact normals are scaled to primitive integer vectors,
/// inexact ones to unit length; in both cases the first nonzero coordinate
/// is positive.
struct Hyperplane {
  Vector normal;
  Scalar offset;

  /// Throws ZeroVector.
  static Hyperplane make(const Vector& normal, const Scalar& offset = Scalar(0));
  bool exact() const;
  /// <x, normal> - offset.
  Scalar evaluate(const Vector& x) const { return dot(x, normal) - offset; }
  /// Image under g (not necessarily in canonical position before make()).
  Hyperplane image(const Isometry& g) const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

/// Approximate equality for inexact hyperplanes; exact ones compare exactly.
bool same_hyperplane(const Hyperplane& a, const Hyperplane& b, double tol = 1e-9);

enum class ArrangementKind { Finite, Periodic };

/// Base hyperplanes, each standing for the family
/// {<x, normal> = offset + k * step : k in Z}; step 0 means a single member.
class Arrangement {
 public:
  Arrangement(std::vector<Hyperplane> base, std::vector<Scalar> steps, std::optional<Lattice> period = std::nullopt);

  ArrangementKind kind() const { return periodic_ ? ArrangementKind::Periodic : ArrangementKind::Finite; }
  std::size_t dim() const { return dim_; }
  const std::vector<Hyperplane>& base() const { return base_; }
  const std::vector<Scalar>& steps() const { return steps_; }
  /// Translation lattice of a periodic arrangement, if known.
  const std::optional<Lattice>& period_lattice() const { return period_; }

  /// Index of the base family containing h, if any.
  std::optional<std::size_t> family_of(const Hyperplane& h) const;
  /// Family members meeting the closed ball of the given radius.
  std::vector<Hyperplane> members_meeting_ball(const Vector& center, double radius) const;

 private:
  std::vector<Hyperplane> base_;
  std::vector<Scalar> steps_;
  std::optional<Lattice> period_;
  std::size_t dim_ = 0;
  bool periodic_ = false;
};

/// One hyperplane per positive root through the origin.
Arrangement arrangement_of(const FiniteCoxeterGroup& group);
/// Families {<x, alpha> = k} per positive root alpha, period Γ.
Arrangement arrangement_of(const AffineWeylGroup& group);
/// Union of the component arrangements on their coordinate blocks.
Arrangement arrangement_of(const CoxeterGroup& group);

/// Whether every family member meeting the ball of radius probe_radius about
/// the origin maps under g to a family member. Finite arrangements are
/// checked globally and the probe is ignored.
bool is_invariant(const Arrangement& arr, const Isometry& g, double probe_radius);

struct ChamberId {
  /// Per base family: 0 on a member, otherwise the sign of <x, n> - offset
  /// (finite) or +1 (periodic, where the level carries the position).
  std::vector<int> sign_vector;
  /// Periodic families: floor((<x, n> - offset) / step).
  std::vector<long long> levels;
  /// Periodic (affine Weyl) arrangements off the walls: g with
  /// chamber = g(fundamental alcove).
  std::optional<AffineElement> alcove;

  bool on_wall() const;
  friend bool operator==(const ChamberId& a, const ChamberId& b) {
    return a.sign_vector == b.sign_vector && a.levels == b.levels;
  }
};

/// Float walls use |<x, n> - offset| < 1e-9 (1 + |x|); exact walls exact zero.
ChamberId chamber_of(const Arrangement& arr, const Vector& x);
/// Same, with alcove coordinates from folding into the fundamental alcove.
ChamberId chamber_of(const Arrangement& arr, const AffineWeylGroup& group, const Vector& x);

/// Number of distinct full-sign vectors over the fixed sampling scheme:
/// normalised signed sums of up to rank base normals with a deterministic
/// jitter, plus 10 |H|^2 seeded random unit vectors. Throws Error for
/// periodic arrangements.
std::size_t count_chambers(const Arrangement& arr);

}  // namespace coxinv
