#include "coxinv/root_system.hpp"

#include "coxinv/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace coxinv {

namespace {

Vector e_minus(std::size_t n, std::size_t i, std::size_t j) {
  Vector v(n);
  v[i] = 1;
  v[j] = -1;
  return v;
}

Vector reflect(const Vector& x, const Vector& root, const Vector& coroot) {
  return x - dot(x, root) * coroot;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidClassification(what);
}

std::vector<Vector> simple_roots_for(RootType type, int n, int m, std::size_t& ambient) {
  std::vector<Vector> s;
  switch (type) {
    case RootType::A:
      require(n >= 1, "A_n requires n >= 1");
      ambient = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(e_minus(ambient, i, i + 1));
      break;
    case RootType::B:
    case RootType::C:
      require(n >= 2, "B_n and C_n require n >= 2");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_minus(ambient, i, i + 1));
      s.push_back((type == RootType::B ? Scalar(1) : Scalar(2)) * unit(ambient, n - 1));
      break;
    case RootType::D: {
      require(n >= 4, "D_n requires n >= 4");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_minus(ambient, i, i + 1));
      Vector last(ambient);
      last[n - 2] = 1;
      last[n - 1] = 1;
      s.push_back(last);
      break;
    }
    case RootType::E: {
      require(n >= 6 && n <= 8, "E_n requires 6 <= n <= 8");
      ambient = 8;
      const Scalar h = Scalar::fraction(1, 2);
      Vector a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      Vector a2(8);
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a1);
      s.push_back(a2);
      s.push_back(e_minus(8, 1, 0));
      for (int i = 3; i < n; ++i) s.push_back(e_minus(8, i - 1, i - 2));
      break;
    }
    case RootType::F: {
      require(n == 4, "F_n requires n = 4");
      ambient = 4;
      const Scalar h = Scalar::fraction(1, 2);
      s.push_back(e_minus(4, 1, 2));
      s.push_back(e_minus(4, 2, 3));
      s.push_back(unit(4, 3));
      s.push_back(Vector{h, -h, -h, -h});
      break;
    }
    case RootType::G:
      require(n == 2, "G_n requires n = 2");
      ambient = 3;
      s.push_back(Vector{1, -1, 0});
      s.push_back(Vector{-2, 1, 1});
      break;
    case RootType::I2:
      require(n == 2, "I2(m) has rank 2");
      require(m >= 2, "I2(m) requires m >= 2");
      if (m == 2) {
        ambient = 2;
        s = {unit(2, 0), unit(2, 1)};
      } else if (m == 3) {
        s = simple_roots_for(RootType::A, 2, 0, ambient);
      } else if (m == 4) {
        s = simple_roots_for(RootType::B, 2, 0, ambient);
      } else if (m == 6) {
        s = simple_roots_for(RootType::G, 2, 0, ambient);
      } else {
        ambient = 2;
        const double t = std::numbers::pi / m;
        s.push_back(Vector{1.0, 0.0});
        s.push_back(Vector{-std::cos(t), std::sin(t)});
      }
      break;
  }
  return s;
}

}  // namespace

RootType parse_root_type(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "E") return RootType::E;
  if (s == "F") return RootType::F;
  if (s == "G") return RootType::G;
  if (s == "I2" || s == "I") return RootType::I2;
  throw InvalidClassification("unknown root type '" + s + "'");
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
    case RootType::I2: return "I2";
  }
  return "?";
}

std::string RootSystem::label() const {
  if (type_ == RootType::I2) return "I2(" + std::to_string(m_) + ")";
  return to_string(type_) + std::to_string(rank_);
}

Vector coroot_of(const Vector& root) {
  Scalar n2 = dot(root, root);
  if (n2.is_zero()) throw ZeroVector("coroot of the zero vector");
  return (Scalar(2) / n2) * root;
}

std::vector<Vector> fundamental_weights(const std::vector<Vector>& simple) {
  const std::size_t r = simple.size();
  std::vector<Vector> coroots;
  for (const auto& a : simple) coroots.push_back(coroot_of(a));
  // gamma_i = sum_k c_ik alpha_k with sum_k c_ik <alpha_k, coroot_j> = delta_ij.
  Matrix mt(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) mt(j, k) = dot(simple[k], coroots[j]);
  std::vector<Vector> rhs;
  for (std::size_t i = 0; i < r; ++i) rhs.push_back(unit(r, i));
  auto coeffs = solve(mt, rhs);
  if (!coeffs) throw SingularGram("simple roots are linearly dependent");
  std::vector<Vector> weights;
  for (std::size_t i = 0; i < r; ++i) {
    Vector g = zeros(simple.front().size());
    for (std::size_t k = 0; k < r; ++k) g = g + (*coeffs)[i][k] * simple[k];
    weights.push_back(std::move(g));
  }
  return weights;
}

std::vector<Vector> fundamental_weights(const RootSystem& rs) {
  return fundamental_weights(rs.simple_roots());
}

RootSystem build_root_system(RootType type, int rank, int m) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.m_ = type == RootType::I2 ? m : 0;
  rs.simple_ = simple_roots_for(type, rank, m, rs.ambient_dim_);
  rs.crystallographic_ = !(type == RootType::I2 && m != 2 && m != 3 && m != 4 && m != 6);
  rs.complete();
  return rs;
}

RootSystem root_system_from_simple_roots(RootType type, int rank, int m, std::vector<Vector> simple) {
  if (simple.size() != static_cast<std::size_t>(rank) || simple.empty())
    throw InvalidClassification("simple root count does not match rank");
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.m_ = type == RootType::I2 ? m : 0;
  rs.ambient_dim_ = simple.front().size();
  rs.simple_ = std::move(simple);
  rs.crystallographic_ = true;
  for (const auto& a : rs.simple_) rs.crystallographic_ = rs.crystallographic_ && all_exact(a);
  rs.complete();
  return rs;
}

void RootSystem::complete() {
  const std::size_t r = simple_.size();
  simple_coroots_.clear();
  for (const auto& a : simple_) simple_coroots_.push_back(coroot_of(a));

  cartan_ = Matrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan_(i, j) = dot(simple_coroots_[i], simple_[j]);

  // Orbit of the simple roots under the simple reflections.
  std::vector<Vector> all = simple_;
  std::set<std::string> seen;
  for (const auto& a : all) seen.insert(key_of(a));
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      Vector img = reflect(all[head], simple_[i], simple_coroots_[i]);
      if (seen.insert(key_of(img)).second) all.push_back(std::move(img));
    }
    if (all.size() > 100000) throw InvalidClassification("root closure does not terminate");
  }

  auto weights = fundamental_weights(simple_);
  Vector rho = zeros(ambient_dim_);
  for (const auto& w : weights) rho = rho + w;

  positive_.clear();
  for (auto& a : all)
    if (dot(a, rho) > Scalar(0)) positive_.push_back(a);

  highest_.clear();
  if (crystallographic_) {
    Scalar best(-1);
    for (const auto& a : positive_) {
      Vector c = simple_coordinates(a);
      Scalar h;
      for (const auto& x : c) h += x;
      if (h > best) best = h, highest_ = a;
    }
  }
}

std::vector<Vector> RootSystem::roots() const {
  std::vector<Vector> out = positive_;
  for (const auto& a : positive_) out.push_back(Scalar(-1) * a);
  return out;
}

const Vector& RootSystem::highest_root() const {
  if (!crystallographic_) throw NotCrystallographic(label() + " has no highest root");
  return highest_;
}

Vector RootSystem::simple_coordinates(const Vector& v) const {
  const std::size_t r = simple_.size();
  Matrix g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g(i, j) = dot(simple_[i], simple_[j]);
  Vector rhs(r);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = dot(simple_[i], v);
  auto c = solve(g, {rhs});
  if (!c) throw SingularGram("simple roots are linearly dependent");
  return (*c)[0];
}

std::vector<int> RootSystem::classified_degrees() const {
  std::vector<int> d;
  const int n = rank_;
  switch (type_) {
    case RootType::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case RootType::B:
    case RootType::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case RootType::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case RootType::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case RootType::F: d = {2, 6, 8, 12}; break;
    case RootType::G: d = {2, 6}; break;
    case RootType::I2: d = {2, m_}; break;
  }
  return d;
}

std::size_t RootSystem::classified_order() const {
  std::size_t order = 1;
  for (int d : classified_degrees()) order *= static_cast<std::size_t>(d);
  return order;
}

std::pair<Lattice, Lattice> lattices(const RootSystem& rs) {
  if (!rs.crystallographic()) throw NotCrystallographic(rs.label() + " has no lattice data");
  Lattice coroot{rs.simple_coroots(), LatticeKind::Coroot};
  Lattice weight{fundamental_weights(rs), LatticeKind::Weight};
  return {coroot, weight};
}

std::vector<BigInt> weight_lattice_invariants(const RootSystem& rs) {
  if (!rs.crystallographic()) throw NotCrystallographic(rs.label() + " has no lattice data");
  const auto& c = rs.cartan_matrix();
  std::vector<std::vector<BigInt>> m(c.rows(), std::vector<BigInt>(c.cols()));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) m[i][j] = numerator(c(i, j).rational());
  return smith_invariants(m);
}

}  // namespace coxinv
