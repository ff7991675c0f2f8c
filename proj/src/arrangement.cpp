#include "coxinv/arrangement.hpp"

#include "coxinv/errors.hpp"
#include "coxinv/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace coxinv {

namespace {

constexpr std::size_t kMaxSubsetSamples = 1000000;

double norm_d(const Vector& v) {
  double s = 0;
  for (const auto& x : v) s += x.to_double() * x.to_double();
  return std::sqrt(s);
}

bool near_zero(const Scalar& v, double tol) { return v.exact() ? v.is_zero() : std::abs(v.to_double()) < tol; }

// 0 within the wall tolerance, otherwise the sign.
int wall_sign(const Scalar& v, double scale) {
  if (v.exact()) return v.sign();
  const double d = v.to_double();
  if (std::abs(d) < 1e-9 * (1 + scale)) return 0;
  return d > 0 ? 1 : -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hyperplane

Hyperplane Hyperplane::make(const Vector& normal, const Scalar& offset) {
  if (is_zero(normal)) throw ZeroVector("hyperplane normal is zero");
  Scalar scale(1);
  if (all_exact(normal) && offset.exact()) {
    BigInt den = 1;
    for (const auto& v : normal) den = boost::multiprecision::lcm(den, denominator(v.rational()));
    BigInt g = 0;
    for (const auto& v : normal) {
      BigInt num = numerator(v.rational()) * (den / denominator(v.rational()));
      g = boost::multiprecision::gcd(g, num);
    }
    if (g < 0) g = -g;
    scale = Scalar(Rational(den, g));
  } else {
    scale = Scalar(1.0 / norm_d(normal));
  }
  const double n = norm_d(normal);
  for (const auto& v : normal) {
    const bool nonzero = v.exact() ? !v.is_zero() : std::abs(v.to_double()) > 1e-12 * n;
    if (!nonzero) continue;
    if (v.sign() < 0) scale = -scale;
    break;
  }
  return {scale * normal, offset * scale};
}

bool Hyperplane::exact() const { return all_exact(normal) && offset.exact(); }

Hyperplane Hyperplane::image(const Isometry& g) const {
  // g(H) = {y : <g^-1 y, n> = o} = {y : <y, L^-T n> = o + <t, L^-T n>}
  auto m = solve(g.linear.transpose(), {normal});
  if (!m) throw Error("isometry is not invertible");
  const Vector& mt = m->front();
  return make(mt, offset + dot(g.translation, mt));
}

bool same_hyperplane(const Hyperplane& a, const Hyperplane& b, double tol) {
  if (a.exact() && b.exact()) return a == b;
  if (a.normal.size() != b.normal.size()) return false;
  for (std::size_t i = 0; i < a.normal.size(); ++i)
    if (std::abs((a.normal[i] - b.normal[i]).to_double()) > tol) return false;
  return std::abs((a.offset - b.offset).to_double()) <= tol * (1 + std::abs(a.offset.to_double()));
}

// ---------------------------------------------------------------------------
// Arrangement

Arrangement::Arrangement(std::vector<Hyperplane> base, std::vector<Scalar> steps, std::optional<Lattice> period)
    : base_(std::move(base)), steps_(std::move(steps)), period_(std::move(period)) {
  if (steps_.size() != base_.size()) throw Error("one step per base hyperplane is required");
  for (auto& h : base_) h = Hyperplane::make(h.normal, h.offset);
  dim_ = base_.empty() ? 0 : base_.front().normal.size();
  for (const auto& s : steps_) {
    if (s < Scalar(0)) throw Error("family steps must be nonnegative");
    if (!near_zero(s, 1e-15)) periodic_ = true;
  }
}

std::optional<std::size_t> Arrangement::family_of(const Hyperplane& h) const {
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const Hyperplane& b = base_[i];
    Hyperplane aligned{b.normal, h.offset};
    if (!same_hyperplane(aligned, h)) continue;
    const Scalar diff = h.offset - b.offset;
    if (near_zero(steps_[i], 1e-15)) {
      if (near_zero(diff, 1e-9 * (1 + std::abs(b.offset.to_double())))) return i;
      continue;
    }
    const Scalar q = diff / steps_[i];
    if (q.exact() ? q.is_integer() : std::abs(q.to_double() - std::round(q.to_double())) < 1e-9) return i;
  }
  return std::nullopt;
}

std::vector<Hyperplane> Arrangement::members_meeting_ball(const Vector& center, double radius) const {
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const Hyperplane& b = base_[i];
    const double reach = radius * norm_d(b.normal);
    const double at = dot(center, b.normal).to_double();
    if (near_zero(steps_[i], 1e-15)) {
      if (std::abs(b.offset.to_double() - at) <= reach) out.push_back(b);
      continue;
    }
    const double s = steps_[i].to_double(), o = b.offset.to_double();
    const auto lo = static_cast<long long>(std::ceil((at - reach - o) / s - 1e-12));
    const auto hi = static_cast<long long>(std::floor((at + reach - o) / s + 1e-12));
    for (long long k = lo; k <= hi; ++k) out.push_back({b.normal, b.offset + Scalar(k) * steps_[i]});
  }
  return out;
}

// ---------------------------------------------------------------------------

Arrangement arrangement_of(const FiniteCoxeterGroup& group) {
  std::vector<Hyperplane> hs;
  for (const auto& a : group.root_system().positive_roots()) hs.push_back(Hyperplane::make(a));
  return Arrangement(hs, std::vector<Scalar>(hs.size(), Scalar(0)));
}

Arrangement arrangement_of(const AffineWeylGroup& group) {
  std::vector<Hyperplane> hs;
  std::vector<Scalar> steps;
  for (const auto& a : group.root_system().positive_roots()) {
    Hyperplane h = Hyperplane::make(a);
    hs.push_back(h);
    // <x, alpha> = k in canonical units: the step is |canonical normal / alpha|
    std::size_t i = 0;
    while (a[i].is_zero()) ++i;
    steps.push_back(abs(h.normal[i] / a[i]));
  }
  return Arrangement(hs, steps, group.translation_lattice());
}

Arrangement arrangement_of(const CoxeterGroup& group) {
  std::vector<Hyperplane> hs;
  std::vector<Scalar> steps;
  const std::size_t n = group.dim();
  for (std::size_t c = 0; c < group.components().size(); ++c) {
    const auto& comp = group.components()[c];
    Arrangement part = comp.affine ? arrangement_of(group.affine_group(c)) : arrangement_of(group.finite_group(c));
    for (std::size_t i = 0; i < part.base().size(); ++i) {
      Vector v = zeros(n);
      const auto& h = part.base()[i];
      std::copy(h.normal.begin(), h.normal.end(), v.begin() + static_cast<std::ptrdiff_t>(comp.offset));
      hs.push_back(Hyperplane::make(v, h.offset));
      steps.push_back(part.steps()[i]);
    }
  }
  return Arrangement(hs, steps);
}

bool is_invariant(const Arrangement& arr, const Isometry& g, double probe_radius) {
  if (g.dim() != arr.dim()) throw Error("isometry and arrangement dimensions differ");
  std::vector<Hyperplane> probe =
      arr.kind() == ArrangementKind::Finite ? arr.base() : arr.members_meeting_ball(zeros(arr.dim()), probe_radius);
  for (const auto& h : probe)
    if (!arr.family_of(h.image(g))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Chambers

bool ChamberId::on_wall() const {
  return std::find(sign_vector.begin(), sign_vector.end(), 0) != sign_vector.end();
}

ChamberId chamber_of(const Arrangement& arr, const Vector& x) {
  const double scale = norm_d(x);
  ChamberId id;
  for (std::size_t i = 0; i < arr.base().size(); ++i) {
    const Hyperplane& h = arr.base()[i];
    const Scalar v = h.evaluate(x);
    const Scalar& step = arr.steps()[i];
    if (arr.kind() == ArrangementKind::Finite || near_zero(step, 1e-15)) {
      id.sign_vector.push_back(wall_sign(v, scale));
      if (arr.kind() == ArrangementKind::Periodic) id.levels.push_back(0);
      continue;
    }
    const Scalar q = v / step;
    const BigInt level = q.floor();
    const Scalar nearest(Rational(q.round()));
    id.levels.push_back(static_cast<long long>(level));
    id.sign_vector.push_back(wall_sign(v - nearest * step, scale) == 0 ? 0 : 1);
  }
  return id;
}

ChamberId chamber_of(const Arrangement& arr, const AffineWeylGroup& group, const Vector& x) {
  ChamberId id = chamber_of(arr, x);
  if (id.on_wall()) return id;
  FoldResult f = group.fold(x);
  // x = T_shift s_{w_1} ... s_{w_k} (folded point)
  Isometry g = group.element(Matrix::identity(group.dim()), f.shift);
  for (int i : f.word) g = g.compose(group.generators()[static_cast<std::size_t>(i)]);
  id.alcove = group.factor(g);
  return id;
}

std::size_t count_chambers(const Arrangement& arr) {
  if (arr.kind() != ArrangementKind::Finite) throw Error("chamber counting needs a finite arrangement");
  const std::size_t n = arr.dim();
  const auto& hs = arr.base();
  if (hs.empty()) return 1;

  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  std::vector<Vector> rows;
  for (const auto& h : hs) {
    auto v = to_doubles(h.normal);
    const double l = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (auto& c : v) c /= l;
    normals.push_back(v);
    offsets.push_back(h.offset.to_double() / l);
    rows.push_back(h.normal);
  }
  const std::size_t r = rank(Matrix::from_rows(rows));

  std::set<std::vector<int>> seen;
  auto record = [&](std::vector<double> x) {
    double len = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    if (len == 0) return;
    for (auto& c : x) c /= len;
    std::vector<int> signs;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      const double v = std::inner_product(x.begin(), x.end(), normals[i].begin(), 0.0) - offsets[i];
      if (std::abs(v) < 1e-9 * 2) return;
      signs.push_back(v > 0 ? 1 : -1);
    }
    seen.insert(std::move(signs));
  };

  // Signed subset sums of up to r normals, each with its own jitter.
  std::uint64_t sample = 0;
  std::vector<std::size_t> idx;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (sample >= kMaxSubsetSamples) return;
    if (!idx.empty()) {
      const std::size_t k = idx.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k) && sample < kMaxSubsetSamples; ++mask) {
        SampleRng jitter(0x6a09e667, 0, sample++);
        std::vector<double> x(n);
        for (auto& c : x) c = jitter.uniform(-1e-3, 1e-3);
        for (std::size_t j = 0; j < k; ++j) {
          const double s = (mask >> j) & 1 ? -1.0 : 1.0;
          for (std::size_t c = 0; c < n; ++c) x[c] += s * normals[idx[j]][c];
        }
        record(std::move(x));
      }
    }
    if (idx.size() == r) return;
    for (std::size_t i = start; i < normals.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  visit(visit, 0);

  const std::size_t extra = 10 * hs.size() * hs.size();
  for (std::size_t k = 0; k < extra; ++k) {
    SampleRng rng(0xbb67ae85, 1, k);
    std::vector<double> x(n);
    for (auto& c : x) c = rng.uniform(-1, 1);
    record(std::move(x));
  }
  return seen.size();
}

}  // namespace coxinv
