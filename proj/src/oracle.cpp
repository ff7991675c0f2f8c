#include "coxinv/oracle.hpp"

#include "coxinv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace coxinv {

namespace {

enum Stream : std::uint64_t { kAudit = 401 };

constexpr int kMaxShell = 6;

// Every vector in [-r, r]^n, lexicographic.
std::vector<std::vector<long long>> box(std::size_t n, int r) {
  std::vector<std::vector<long long>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<long long>> next;
    for (const auto& p : out)
      for (long long k = -r; k <= r; ++k) {
        next.push_back(p);
        next.back().push_back(k);
      }
    out = std::move(next);
  }
  return out;
}

Vector place(const Vector& x, const Vector& b, std::size_t offset) {
  Vector out = x;
  std::copy(b.begin(), b.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
  return out;
}

}  // namespace

std::vector<Vector> finite_orbit(const FiniteCoxeterGroup& group, const Vector& x) {
  std::vector<Vector> out;
  std::set<std::string> seen;
  for (const auto& g : group.elements()) {
    Vector y = g.apply(x);
    if (seen.insert(key_of(y)).second) out.push_back(std::move(y));
  }
  return out;
}

std::vector<Vector> finite_orbit(const AffineWeylGroup&, const Vector&) {
  throw NotFinite("affine Weyl groups have infinite orbits; use bounded_affine_orbit");
}

BoundedOrbit bounded_affine_orbit(const AffineWeylGroup& group, const Vector& x, int radius) {
  if (radius < 1) throw Error("orbit radius must be at least 1");
  if (radius > kMaxShell) throw EnumerationCap("orbit radius is capped at " + std::to_string(kMaxShell));
  BoundedOrbit orbit{x, radius, {}};
  std::set<std::string> seen;
  const auto& elems = group.finite_part().elements();
  const auto shifts = box(static_cast<std::size_t>(group.root_system().rank()), radius);
  for (std::size_t w = 0; w < elems.size(); ++w) {
    const Vector wx = elems[w].apply(x);
    for (const auto& s : shifts) {
      Vector y = wx + group.lattice_vector(s);
      if (seen.insert(key_of(y)).second) orbit.points.push_back({w, s, std::move(y)});
    }
  }
  return orbit;
}

AuditReport oracle_separation_audit(const SeparatingMap& f, const CoxeterGroup& group, std::size_t n, int radius,
                                    std::uint64_t seed) {
  AuditReport r;
  r.base_points = n;
  r.radius = radius;
  r.seed = seed;
  r.distinct_min = std::numeric_limits<double>::infinity();
  std::vector<Vector> bases;
  std::vector<Point> values;
  for (std::size_t s = 0; s < n; ++s) {
    SampleRng rng(seed, kAudit, s);
    Vector x = group.random_point(rng, 1.0);
    const Point fx = f.evaluate(to_point(x));
    const double scale = 1 + fx.lpNorm<Eigen::Infinity>();
    for (std::size_t c = 0; c < group.components().size(); ++c) {
      const auto& comp = group.components()[c];
      const Vector b = group.block(x, c);
      std::vector<Vector> images;
      if (comp.affine) {
        for (auto& p : bounded_affine_orbit(group.affine_group(c), b, radius).points) images.push_back(std::move(p.point));
      } else {
        images = finite_orbit(group.finite_group(c), b);
      }
      r.orbit_points += images.size();
      for (const auto& y : images) {
        const double d = (f.evaluate(to_point(place(x, y, comp.offset))) - fx).lpNorm<Eigen::Infinity>();
        r.constancy_max = std::max(r.constancy_max, d / scale);
      }
    }
    bases.push_back(std::move(x));
    values.push_back(fx);
  }
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (group.orbit_equal(bases[i], bases[j], 1e-9)) continue;
      ++r.distinct_pairs;
      r.distinct_min = std::min(r.distinct_min, (values[i] - values[j]).norm());
    }
  if (r.distinct_pairs == 0) r.distinct_min = 0;
  r.pass = r.constancy_max < 1e-9 && (r.distinct_pairs == 0 || r.distinct_min > 1e-6);
  return r;
}

}  // namespace coxinv
