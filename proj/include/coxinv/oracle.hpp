#pragma once

// Brute-force orbit enumeration used as ground truth for folding,
// separation and invariance.

#include "coxinv/reflection_group.hpp"
#include "coxinv/separator.hpp"

#include <cstdint>
#include <vector>

namespace coxinv {

/// {g x : g enumerated}, duplicates removed (exact keys, or a 1e-9 grid).
std::vector<Vector> finite_orbit(const FiniteCoxeterGroup& group, const Vector& x);
/// Always throws NotFinite.
std::vector<Vector> finite_orbit(const AffineWeylGroup& group, const Vector& x);

struct OrbitPoint {
  std::size_t linear_index;       // index into the enumerated finite part
  std::vector<long long> lattice; // coroot coordinates of the translation
  Vector point;
};

/// {w x + gamma : w in W, gamma in Γ with coroot coordinates in [-R, R]},
/// first occurrence kept at coincidences.
struct BoundedOrbit {
  Vector base_point;
  int radius = 0;
  std::vector<OrbitPoint> points;
};

/// Throws NotCrystallographic (via the group), Error for R < 1 and
/// EnumerationCap for R > 6.
BoundedOrbit bounded_affine_orbit(const AffineWeylGroup& group, const Vector& x, int radius);

struct AuditReport {
  std::size_t base_points = 0;
  int radius = 0;
  std::uint64_t seed = 0;
  std::size_t orbit_points = 0;
  /// max over orbit members y of |F(y) - F(x)|_inf / (1 + |F(x)|_inf)
  double constancy_max = 0;
  /// min |F(x) - F(x')| over pairs of base points in different orbits
  std::size_t distinct_pairs = 0;
  double distinct_min = 0;
  bool pass = false;
};

/// Base points uniform in [-1, 1]^n; each group component's orbit is
/// enumerated with the other blocks held fixed (F is blockwise).
/// Passes iff constancy_max < 1e-9 and distinct_min > 1e-6.
AuditReport oracle_separation_audit(const SeparatingMap& f, const CoxeterGroup& group, std::size_t n, int radius,
                                    std::uint64_t seed = 0);

}  // namespace coxinv
