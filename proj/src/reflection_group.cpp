#include "coxinv/reflection_group.hpp"

#include "coxinv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <set>

namespace coxinv {

namespace {

constexpr std::size_t kMaxEnumeratedOrder = 51840;

double norm_d(const Vector& v) {
  double s = 0;
  for (const auto& x : v) s += x.to_double() * x.to_double();
  return std::sqrt(s);
}

// True when the pairing is strictly negative: exactly for exact data,
// beyond a scale-aware tolerance otherwise.
bool violates(const Scalar& pairing, double scale) {
  if (pairing.exact()) return pairing.sign() < 0;
  return pairing.to_double() < -1e-12 * (1.0 + scale);
}

// s_alpha * m without a full matrix product.
Matrix reflect_left(const Vector& root, const Vector& coroot, const Matrix& m) {
  Matrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Scalar p;
    for (std::size_t k = 0; k < m.rows(); ++k) p += root[k] * m(k, j);
    if (p.is_zero() && p.exact()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) -= coroot[i] * p;
  }
  return out;
}

bool close(const Matrix& a, const Matrix& b, double tol) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (std::abs((a(i, j) - b(i, j)).to_double()) > tol) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Isometry

Isometry Isometry::identity(std::size_t n) { return {Matrix::identity(n), zeros(n)}; }

Vector Isometry::apply(const Vector& x) const { return linear * x + translation; }

Isometry Isometry::compose(const Isometry& other) const {
  return {linear * other.linear, linear * other.translation + translation};
}

Isometry Isometry::inverse() const {
  Matrix lt = linear.transpose();
  return {lt, Scalar(-1) * (lt * translation)};
}

bool Isometry::is_orthogonal(double tol) const {
  Matrix p = linear.transpose() * linear;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      Scalar d = p(i, j) - Scalar(i == j ? 1 : 0);
      if (d.exact() ? !d.is_zero() : std::abs(d.to_double()) > tol) return false;
    }
  return true;
}

Isometry Isometry::embed(std::size_t offset, std::size_t ambient) const {
  Isometry out = identity(ambient);
  for (std::size_t i = 0; i < dim(); ++i) {
    out.translation[offset + i] = translation[i];
    for (std::size_t j = 0; j < dim(); ++j) out.linear(offset + i, offset + j) = linear(i, j);
  }
  return out;
}

Isometry reflection_in(const Vector& root, const Scalar& offset) {
  Vector coroot = coroot_of(root);
  const std::size_t n = root.size();
  Isometry r = Isometry::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.linear(i, j) -= coroot[i] * root[j];
  r.translation = offset * coroot;
  return r;
}

// ---------------------------------------------------------------------------
// FiniteCoxeterGroup

struct FiniteCoxeterGroup::Cache {
  std::once_flag once;
  std::vector<Isometry> elements;
};

FiniteCoxeterGroup::FiniteCoxeterGroup(RootSystem rs)
    : rs_(std::move(rs)), cache_(std::make_shared<Cache>()) {
  for (const auto& a : rs_.simple_roots()) generators_.push_back(reflection_in(a));
}

const std::vector<Isometry>& FiniteCoxeterGroup::elements() const {
  std::call_once(cache_->once, [this] {
    if (rs_.classified_order() > kMaxEnumeratedOrder)
      throw EnumerationCap(rs_.label() + " exceeds the enumeration cap");
    const auto& roots = rs_.simple_roots();
    const auto& coroots = rs_.simple_coroots();
    std::vector<Matrix> found{Matrix::identity(dim())};
    std::set<std::string> seen{key_of(found.front())};
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        Matrix next = reflect_left(roots[i], coroots[i], found[head]);
        if (next.exact()) {
          if (seen.insert(key_of(next)).second) found.push_back(std::move(next));
        } else if (std::none_of(found.begin(), found.end(),
                                [&](const Matrix& m) { return close(m, next, 1e-9); })) {
          found.push_back(std::move(next));
        }
      }
      if (found.size() > kMaxEnumeratedOrder) throw EnumerationCap("enumeration did not close");
    }
    cache_->elements.reserve(found.size());
    for (auto& m : found) cache_->elements.push_back({std::move(m), zeros(dim())});
  });
  return cache_->elements;
}

FoldResult FiniteCoxeterGroup::fold(const Vector& x) const {
  FoldResult out{x, {}, {}};
  const auto& roots = rs_.simple_roots();
  const auto& coroots = rs_.simple_coroots();
  const double scale = norm_d(x);
  const std::size_t bound = rs_.positive_roots().size();
  for (;;) {
    std::size_t i = 0;
    for (; i < roots.size(); ++i)
      if (violates(dot(out.point, roots[i]), scale)) break;
    if (i == roots.size()) break;
    out.point = out.point - dot(out.point, roots[i]) * coroots[i];
    out.word.push_back(static_cast<int>(i));
    if (out.word.size() > bound) throw Error("chamber folding exceeded the positive-root bound");
  }
  return out;
}

std::vector<Isometry> enumerate(const FiniteCoxeterGroup& group) { return group.elements(); }

std::vector<Isometry> enumerate(const AffineWeylGroup& group) {
  throw NotFinite("affine Weyl group " + group.root_system().label() + " is infinite");
}

FoldResult fold_to_chamber(const FiniteCoxeterGroup& group, const Vector& x) { return group.fold(x); }

// ---------------------------------------------------------------------------
// AffineWeylGroup

namespace {

RootSystem require_crystallographic(RootSystem rs) {
  if (!rs.crystallographic())
    throw NotCrystallographic(rs.label() + " is not crystallographic; no affine Weyl group");
  return rs;
}

}  // namespace

AffineWeylGroup::AffineWeylGroup(RootSystem rs) : finite_(require_crystallographic(std::move(rs))) {
  auto [coroot, weight] = lattices(finite_.root_system());
  coroot_lattice_ = std::move(coroot);
  weight_lattice_ = std::move(weight);
  generators_ = finite_.generators();
  generators_.push_back(reflection_in(finite_.root_system().highest_root(), Scalar(1)));
}

Vector AffineWeylGroup::lattice_vector(const std::vector<long long>& coords) const {
  Vector v = zeros(dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    v = v + Scalar(coords[i]) * coroot_lattice_.basis[i];
  return v;
}

std::vector<long long> AffineWeylGroup::lattice_coordinates(const Vector& v) const {
  std::vector<long long> c;
  for (const auto& w : weight_lattice_.basis) {
    Scalar p = dot(v, w);
    if (!p.is_integer()) throw Error("vector is not in the coroot lattice");
    c.push_back(static_cast<long long>(p.round()));
  }
  if (!is_zero(v - lattice_vector(c))) throw Error("vector is not in the coroot lattice");
  return c;
}

Isometry AffineWeylGroup::element(const Matrix& linear, const std::vector<long long>& lattice) const {
  return {linear, lattice_vector(lattice)};
}

AffineElement AffineWeylGroup::factor(const Isometry& g) const {
  AffineElement e{g.linear, lattice_coordinates(g.translation)};
  const std::string key = key_of(g.linear);
  for (const auto& w : finite_.elements())
    if (key_of(w.linear) == key) return e;
  throw Error("linear part is not in the finite Weyl group");
}

FoldResult AffineWeylGroup::fold(const Vector& x) const {
  const auto& rs = finite_.root_system();
  const auto& roots = rs.simple_roots();
  const auto& coroots = rs.simple_coroots();
  const Vector& theta = rs.highest_root();
  const Vector theta_co = coroot_of(theta);
  const std::size_t r = roots.size();

  FoldResult out{x, {}, {}};
  for (const auto& w : weight_lattice_.basis) out.shift.push_back(static_cast<long long>(dot(x, w).round()));
  out.point = x - lattice_vector(out.shift);

  const double scale = norm_d(out.point);
  for (std::size_t steps = 0;; ++steps) {
    if (steps > 10000) throw Error("alcove folding did not terminate");
    std::size_t i = 0;
    for (; i < r; ++i)
      if (violates(dot(out.point, roots[i]), scale)) break;
    if (i < r) {
      out.point = out.point - dot(out.point, roots[i]) * coroots[i];
    } else if (violates(Scalar(1) - dot(out.point, theta), scale)) {
      out.point = out.point - (dot(out.point, theta) - Scalar(1)) * theta_co;
    } else {
      break;
    }
    out.word.push_back(static_cast<int>(i));
  }
  return out;
}

FoldResult fold_to_alcove(const AffineWeylGroup& group, const Vector& x) { return group.fold(x); }

namespace {

bool points_match(const Vector& a, const Vector& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar d = a[i] - b[i];
    if (d.exact() ? !d.is_zero() : std::abs(d.to_double()) > tol) return false;
  }
  return true;
}

}  // namespace

bool orbit_equal(const FiniteCoxeterGroup& group, const Vector& x, const Vector& y, double tol) {
  return points_match(group.fold(x).point, group.fold(y).point, tol);
}

bool orbit_equal(const AffineWeylGroup& group, const Vector& x, const Vector& y, double tol) {
  return points_match(group.fold(x).point, group.fold(y).point, tol);
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

int coxeter_number(const Vector& a, const Vector& b) {
  Scalar ab = dot(a, b);
  if (ab.exact() ? ab.is_zero() : std::abs(ab.to_double()) < 1e-12) return 2;
  Scalar q = ab * ab / (dot(a, a) * dot(b, b));  // cos^2(pi / m)
  if (q.exact()) {
    if (q == Scalar::fraction(1, 4)) return 3;
    if (q == Scalar::fraction(1, 2)) return 4;
    if (q == Scalar::fraction(3, 4)) return 6;
  }
  double c = std::sqrt(std::min(1.0, q.to_double()));
  if (c >= 1.0 - 1e-12) return 0;  // parallel normals: infinite order
  return static_cast<int>(std::lround(std::numbers::pi / std::acos(c)));
}

// Coxeter-graph type; B_n and C_n share a graph and are both reported as B_n.
std::string classify(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return "A1";
  if (n == 2) {
    switch (m[0][1]) {
      case 3: return "A2";
      case 4: return "B2";
      case 6: return "G2";
      default: return "I2(" + std::to_string(m[0][1]) + ")";
    }
  }
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  std::vector<std::pair<std::size_t, std::size_t>> heavy;
  int heavy_label = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] == 2) continue;
      if (m[i][j] != 3) {
        heavy.emplace_back(i, j);
        heavy_label = m[i][j];
      }
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  if (edges != n - 1 || heavy.size() > 1) return "?";
  std::vector<std::size_t> branch, leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return "?";
    if (adj[i].size() == 3) branch.push_back(i);
    if (adj[i].size() == 1) leaves.push_back(i);
  }
  const std::string rank = std::to_string(n);
  if (branch.empty()) {
    if (heavy.empty()) return "A" + rank;
    auto [u, v] = heavy.front();
    bool u_leaf = adj[u].size() == 1, v_leaf = adj[v].size() == 1;
    if (heavy_label == 4) {
      if (n == 4 && !u_leaf && !v_leaf) return "F4";
      if (!u_leaf && !v_leaf) return "?";
      return "B" + rank;
    }
    if (heavy_label == 5 && (u_leaf || v_leaf) && (n == 3 || n == 4)) return "H" + rank;
    return "?";
  }
  if (branch.size() != 1 || !heavy.empty()) return "?";
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch[0]]) {
    std::size_t prev = branch[0], cur = start, len = 1;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + rank;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + rank;
  return "?";
}

}  // namespace

OrthogonalDecomposition decompose(const std::vector<Isometry>& generators, std::size_t ambient_dim) {
  OrthogonalDecomposition out;
  out.ambient_dim = ambient_dim;

  std::vector<Vector> normals;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Isometry& s = generators[g];
    const std::string which = "generator " + std::to_string(g);
    if (s.dim() != ambient_dim) throw NotReflections(which + " has the wrong dimension");
    if (!is_zero(s.translation)) throw NotReflections(which + " is not linear");
    if (!s.is_orthogonal(1e-10)) throw NotReflections(which + " is not orthogonal");
    Matrix defect = Matrix::identity(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) defect(i, j) -= s.linear(i, j);
    if (rank(defect) != 1) throw NotReflections(which + " does not fix a hyperplane");
    {
      Matrix sq = s.linear * s.linear;
      for (std::size_t i = 0; i < ambient_dim; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) {
          Scalar d = sq(i, j) - Scalar(i == j ? 1 : 0);
          if (d.exact() ? !d.is_zero() : std::abs(d.to_double()) > 1e-10)
            throw NotReflections(which + " is not an involution");
        }
    }
    Vector n;
    for (std::size_t j = 0; j < ambient_dim && n.empty(); ++j) {
      Vector c = defect.col(j);
      if (!is_zero(c)) n = c;
    }
    // s(n) = -n identifies the reflection.
    Vector sn = s.apply_linear(n) + n;
    for (const auto& x : sn)
      if (x.exact() ? !x.is_zero() : std::abs(x.to_double()) > 1e-9)
        throw NotReflections(which + " is not a reflection");
    normals.push_back(std::move(n));
  }

  if (normals.empty()) {
    for (std::size_t i = 0; i < ambient_dim; ++i) out.fixed_basis.push_back(unit(ambient_dim, i));
    return out;
  }

  out.fixed_basis = orthogonalize(nullspace(Matrix::from_rows(normals)));

  // Connected components of the graph {i ~ j : <n_i, n_j> != 0}.
  const std::size_t k = normals.size();
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < k; ++j)
        if (comp[j] < 0 && coxeter_number(normals[i], normals[j]) != 2) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }

  for (int c = 0; c < ncomp; ++c) {
    DecompositionFactor f;
    std::vector<Vector> ns;
    for (std::size_t i = 0; i < k; ++i)
      if (comp[i] == c) {
        f.generators.push_back(i);
        ns.push_back(normals[i]);
      }
    f.basis = orthogonalize(ns);
    f.coxeter_matrix.assign(ns.size(), std::vector<int>(ns.size(), 1));
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = 0; j < ns.size(); ++j)
        if (i != j) f.coxeter_matrix[i][j] = coxeter_number(ns[i], ns[j]);
    f.label = f.basis.size() == ns.size() ? classify(f.coxeter_matrix) : "?";
    out.factors.push_back(std::move(f));
  }
  return out;
}

Scalar decomposition_residual(const OrthogonalDecomposition& d, const std::vector<Isometry>& generators) {
  // For each basis vector v of a subspace E and generator g: the part of g v
  // orthogonal to E (and for E_0, g v - v itself).
  Scalar worst;
  auto consider = [&](const Vector& r) {
    for (const auto& x : r) worst = std::max(worst, abs(x));
  };
  auto project_out = [](Vector v, const std::vector<Vector>& basis) {
    for (const auto& u : basis) v = v - (dot(v, u) / dot(u, u)) * u;
    return v;
  };
  for (const auto& g : generators) {
    for (const auto& v : d.fixed_basis) consider(g.apply_linear(v) - v);
    for (const auto& f : d.factors)
      for (const auto& v : f.basis) consider(project_out(g.apply_linear(v), f.basis));
  }
  // Pairwise orthogonality and completeness.
  std::vector<Vector> all = d.fixed_basis;
  for (const auto& f : d.factors) all.insert(all.end(), f.basis.begin(), f.basis.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) worst = std::max(worst, abs(dot(all[i], all[j])));
  if (all.size() != d.ambient_dim) throw Error("decomposition does not span the ambient space");
  return worst;
}

std::vector<std::vector<double>> orthonormal(const std::vector<Vector>& basis) {
  std::vector<std::vector<double>> out;
  for (const auto& v : basis) {
    auto d = to_doubles(v);
    double n = 0;
    for (double x : d) n += x * x;
    n = std::sqrt(n);
    for (double& x : d) x /= n;
    out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CoxeterGroup

CoxeterGroup::CoxeterGroup(const std::vector<Factor>& factors, std::size_t trivial_dims)
    : trivial_dims_(trivial_dims) {
  std::size_t offset = 0;
  for (const auto& f : factors) {
    components_.push_back({f.root_system, f.affine, offset});
    offset += f.root_system.ambient_dim();
  }
  dim_ = offset + trivial_dims;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    if (comp.affine) {
      auto a = std::make_shared<const AffineWeylGroup>(comp.root_system);
      finite_.push_back(std::shared_ptr<const FiniteCoxeterGroup>(a, &a->finite_part()));
      affine_.push_back(a);
      for (const auto& g : a->generators()) {
        generators_.push_back(g.embed(comp.offset, dim_));
        generator_component_.push_back(c);
      }
    } else {
      auto f = std::make_shared<const FiniteCoxeterGroup>(comp.root_system);
      finite_.push_back(f);
      affine_.push_back(nullptr);
      for (const auto& g : f->generators()) {
        generators_.push_back(g.embed(comp.offset, dim_));
        generator_component_.push_back(c);
      }
    }
  }
}

bool CoxeterGroup::is_finite() const {
  return std::none_of(components_.begin(), components_.end(), [](const auto& c) { return c.affine; });
}

const FiniteCoxeterGroup& CoxeterGroup::finite_group(std::size_t component) const {
  return *finite_.at(component);
}

const AffineWeylGroup& CoxeterGroup::affine_group(std::size_t component) const {
  if (!affine_.at(component)) throw Error("component is not affine");
  return *affine_[component];
}

std::vector<Isometry> CoxeterGroup::linear_generators() const {
  std::vector<Isometry> out;
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (const auto& g : finite_[c]->generators()) out.push_back(g.embed(components_[c].offset, dim_));
  return out;
}

Vector CoxeterGroup::block(const Vector& x, std::size_t component) const {
  const auto& c = components_.at(component);
  return Vector(x.begin() + c.offset, x.begin() + c.offset + c.root_system.ambient_dim());
}

Vector CoxeterGroup::fold(const Vector& x) const {
  if (x.size() != dim_) throw Error("point has the wrong dimension");
  Vector out = x;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    Vector b = block(x, c);
    Vector folded = components_[c].affine ? affine_[c]->fold(b).point : finite_[c]->fold(b).point;
    std::copy(folded.begin(), folded.end(), out.begin() + components_[c].offset);
  }
  return out;
}

bool CoxeterGroup::orbit_equal(const Vector& x, const Vector& y, double tol) const {
  Vector a = fold(x), b = fold(y);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar d = a[i] - b[i];
    if (d.exact() ? !d.is_zero() : std::abs(d.to_double()) > tol) return false;
  }
  return true;
}

bool orbit_equal(const CoxeterGroup& group, const Vector& x, const Vector& y, double tol) {
  return group.orbit_equal(x, y, tol);
}

std::size_t CoxeterGroup::finite_order() const {
  std::size_t order = 1;
  for (const auto& f : finite_) order *= f->order();
  return order;
}

Isometry CoxeterGroup::random_element(SampleRng& rng, int lattice_radius) const {
  Isometry g = Isometry::identity(dim_);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& elems = finite_[c]->elements();
    Isometry local = elems[static_cast<std::size_t>(rng.integer(0, static_cast<long long>(elems.size()) - 1))];
    if (components_[c].affine) {
      std::vector<long long> coords;
      for (int i = 0; i < components_[c].root_system.rank(); ++i) coords.push_back(rng.integer(-lattice_radius, lattice_radius));
      local = affine_[c]->element(local.linear, coords);
    }
    g = g.compose(local.embed(components_[c].offset, dim_));
  }
  return g;
}

Vector CoxeterGroup::random_point(SampleRng& rng, double scale) const {
  Vector x(dim_);
  for (auto& v : x) v = rng.uniform(-scale, scale);
  return x;
}

Vector CoxeterGroup::random_interior_point(SampleRng& rng, double wall_floor) const {
  Vector x(dim_);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    const auto& rs = comp.root_system;
    const auto weights = fundamental_weights(rs);
    const std::size_t n = rs.ambient_dim();

    // Directions of this block orthogonal to the roots are part of E_0.
    auto complement = orthonormal(orthogonalize(nullspace(Matrix::from_rows(rs.simple_roots()))));
    std::vector<double> b(n, 0.0);
    for (const auto& u : complement) {
      double t = rng.uniform(-1, 1);
      for (std::size_t i = 0; i < n; ++i) b[i] += t * u[i];
    }

    std::vector<double> theta;
    if (comp.affine) theta = to_doubles(rs.highest_root());
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100000) throw Error("could not sample an interior point");
      std::vector<double> y(n, 0.0);
      for (const auto& w : weights) {
        auto wd = to_doubles(w);
        double norm_w = 0, pair_theta = 0;
        for (std::size_t i = 0; i < n; ++i) norm_w += wd[i] * wd[i];
        for (std::size_t i = 0; i < theta.size(); ++i) pair_theta += wd[i] * theta[i];
        double hi = comp.affine ? 1.0 / pair_theta : 1.0 / std::sqrt(norm_w);
        double t = rng.uniform(0, hi);
        for (std::size_t i = 0; i < n; ++i) y[i] += t * wd[i];
      }
      Vector candidate = to_scalars(y);
      bool ok = true;
      for (const auto& a : rs.simple_roots()) {
        if (dot(candidate, a).to_double() / norm_d(a) < wall_floor) ok = false;
      }
      if (comp.affine) {
        const Vector& th = rs.highest_root();
        if ((1.0 - dot(candidate, th).to_double()) / norm_d(th) < wall_floor) ok = false;
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < n; ++i) x[comp.offset + i] = y[i] + b[i];
      break;
    }
  }
  for (std::size_t i = dim_ - trivial_dims_; i < dim_; ++i) x[i] = rng.uniform(-1, 1);
  return x;
}

std::vector<double> CoxeterGroup::wall_distances(const Vector& x) const {
  std::vector<double> out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    Vector b = block(x, c);
    const auto& rs = components_[c].root_system;
    for (const auto& a : rs.simple_roots()) out.push_back(dot(b, a).to_double() / norm_d(a));
    if (components_[c].affine) {
      const Vector& th = rs.highest_root();
      out.push_back((1.0 - dot(b, th).to_double()) / norm_d(th));
    }
  }
  return out;
}

}  // namespace coxinv
