#include "coxinv/invariants.hpp"

#include "coxinv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace coxinv {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Orbit of v under the group generated by the simple reflections.
std::vector<Vector> vector_orbit(const FiniteCoxeterGroup& g, const Vector& v) {
  std::vector<Vector> out{v};
  std::set<std::string> seen{key_of(v)};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : g.generators()) {
      Vector w = s.apply_linear(out[head]);
      if (seen.insert(key_of(w)).second) out.push_back(std::move(w));
    }
  }
  return out;
}

// Multinomial expansion of <x, v>^d.
Polynomial power_of_linear_form(const Vector& v, int d) {
  const std::size_t n = v.size();
  Polynomial out(n);
  Polynomial::Exponent e(n, 0);
  // coefficient = d! / prod(e_i!) * prod v_i^e_i, built incrementally
  auto rec = [&](auto&& self, std::size_t i, int left, Scalar coef) -> void {
    if (i + 1 == n) {
      e[i] = left;
      Scalar c = coef;
      for (int k = 0; k < left; ++k) c *= v[i];
      // divide by left!
      for (int k = 2; k <= left; ++k) c /= Scalar(k);
      out.add_term(e, c);
      e[i] = 0;
      return;
    }
    Scalar c = coef;
    for (int k = 0; k <= left; ++k) {
      if (k > 0) {
        c *= v[i];
        c /= Scalar(k);
      }
      if (v[i].is_zero() && v[i].exact() && k > 0) break;
      e[i] = k;
      self(self, i + 1, left - k, c);
    }
    e[i] = 0;
  };
  Scalar dfact(1);
  for (int k = 2; k <= d; ++k) dfact *= Scalar(k);
  if (n == 0) return out;
  rec(rec, 0, d, dfact);
  return out;
}

// Reynolds image of sum_u <x,u>^d: the orbit average of each power.
Polynomial averaged_power_sum(const FiniteCoxeterGroup& g, const std::vector<Vector>& us, int d) {
  Polynomial out(g.dim());
  double scale = 0;
  for (const auto& u : us) {
    auto orbit = vector_orbit(g, u);
    Polynomial acc(g.dim());
    for (const auto& v : orbit) {
      Polynomial t = power_of_linear_form(v, d);
      for (const auto& [e, c] : t.terms()) scale = std::max(scale, std::abs(c.to_double()));
      acc = acc + t;
    }
    out = out + acc.scaled(Scalar(1) / Scalar(static_cast<long long>(orbit.size())));
  }
  if (out.exact()) return out;
  // float cancellation leaves noise where the exact average vanishes
  Polynomial pruned(g.dim());
  for (const auto& [e, c] : out.terms())
    if (std::abs(c.to_double()) > 1e-11 * scale) pruned.add_term(e, c);
  return pruned;
}

Eigen::MatrixXd basis_matrix(const std::vector<Vector>& orthogonal_basis) {
  auto on = orthonormal(orthogonal_basis);
  Eigen::MatrixXd b(on.empty() ? 0 : on.front().size(), on.size());
  for (std::size_t j = 0; j < on.size(); ++j)
    for (std::size_t i = 0; i < on[j].size(); ++i) b(i, j) = on[j][i];
  return b;
}

std::size_t normalized_rank(const std::vector<Point>& rows, const Eigen::MatrixXd& basis) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd j(rows.size(), basis.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Eigen::VectorXd r = basis.transpose() * rows[k];
    double n = r.norm();
    j.row(static_cast<Eigen::Index>(k)) = n > 0 ? Eigen::VectorXd(r / n) : r;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-8) ++rank;
  return rank;
}

std::vector<std::vector<long long>> integer_cartan(const RootSystem& rs) {
  const auto& c = rs.cartan_matrix();
  std::vector<std::vector<long long>> out(c.rows(), std::vector<long long>(c.cols()));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) out[i][j] = static_cast<long long>(c(i, j).round());
  return out;
}

// W-orbit of a weight in fundamental-weight coordinates:
// s_i(l) = l - l_i * alpha_i with alpha_i = sum_j cartan(j, i) gamma_j.
std::vector<TrigInvariant::Weight> weight_orbit(const RootSystem& rs, const TrigInvariant::Weight& gamma) {
  auto c = integer_cartan(rs);
  std::vector<TrigInvariant::Weight> out{gamma};
  std::set<TrigInvariant::Weight> seen{gamma};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      TrigInvariant::Weight w = out[head];
      const long long li = w[i];
      if (li == 0) continue;
      for (std::size_t j = 0; j < c.size(); ++j) w[j] -= li * c[j][i];
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  return out;
}

TrigInvariant::Weight dominant_of(const RootSystem& rs, TrigInvariant::Weight w) {
  auto c = integer_cartan(rs);
  for (int guard = 0; guard < 100000; ++guard) {
    auto it = std::find_if(w.begin(), w.end(), [](long long v) { return v < 0; });
    if (it == w.end()) return w;
    const auto i = static_cast<std::size_t>(it - w.begin());
    const long long li = w[i];
    for (std::size_t j = 0; j < c.size(); ++j) w[j] -= li * c[j][i];
  }
  throw InvolutionNotFound("weight fold did not terminate");
}

}  // namespace

Point to_point(const Vector& v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) p(static_cast<Eigen::Index>(i)) = v[i].to_double();
  return p;
}

Vector from_point(const Point& p) {
  Vector v(static_cast<std::size_t>(p.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Scalar(p(static_cast<Eigen::Index>(i)));
  return v;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t variables, const Scalar& c) {
  Polynomial p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
  Polynomial p(variables);
  Exponent e(variables, 0);
  e.at(i) = 1;
  p.add_term(e, Scalar(1));
  return p;
}

Polynomial Polynomial::linear_form(const Vector& v) {
  Polynomial p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Exponent e(v.size(), 0);
    e[i] = 1;
    p.add_term(e, v[i]);
  }
  return p;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != vars_) throw Error("exponent length does not match the variable count");
  if (c.exact() && c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second += c;
  const Scalar& v = it->second;
  if (v.exact() ? v.is_zero() : v.to_double() == 0.0) terms_.erase(it);
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  std::set<int> ds;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    ds.insert(s);
  }
  return ds.size() <= 1;
}

bool Polynomial::exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.exact(); });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.vars_ != vars_) throw Error("polynomials over different variable counts");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(Scalar(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.vars_ != vars_) throw Error("polynomials over different variable counts");
  Polynomial out(vars_);
  Exponent e(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw Error("negative polynomial power");
  Polynomial out = constant(vars_, Scalar(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::compose(const Isometry& g) const {
  if (g.dim() != vars_) throw Error("isometry dimension does not match the variable count");
  // powers[i][k] = (g x)_i ^ k
  std::vector<std::vector<Polynomial>> powers(vars_);
  for (std::size_t i = 0; i < vars_; ++i) {
    Polynomial li = linear_form(g.linear.row(i)) + constant(vars_, g.translation[i]);
    powers[i].push_back(constant(vars_, Scalar(1)));
    powers[i].push_back(li);
  }
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][static_cast<std::size_t>(k)];
  };
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(vars_, c);
    for (std::size_t i = 0; i < vars_; ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    out = out + t;
  }
  return out;
}

Polynomial Polynomial::embed(std::size_t offset, std::size_t ambient) const {
  if (offset + vars_ > ambient) throw Error("embedding exceeds the ambient dimension");
  Polynomial out(ambient);
  for (const auto& [e, c] : terms_) {
    Exponent f(ambient, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    out.add_term(f, c);
  }
  return out;
}

Scalar Polynomial::evaluate(const Vector& x) const {
  if (x.size() != vars_) throw Error("point dimension does not match the variable count");
  Scalar s;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

// ---------------------------------------------------------------------------
// TrigInvariant

TrigInvariant::TrigInvariant(std::vector<Vector> weight_basis, bool real)
    : basis_(std::move(weight_basis)), real_(real) {}

void TrigInvariant::add_term(const Weight& w, std::complex<double> c) {
  if (w.size() != basis_.size()) throw Error("weight length does not match the weight basis");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (it->second == std::complex<double>(0, 0)) terms_.erase(it);
}

bool TrigInvariant::conjugate_symmetric(double tol) const {
  for (const auto& [w, c] : terms_) {
    Weight neg = w;
    for (auto& v : neg) v = -v;
    auto it = terms_.find(neg);
    const std::complex<double> partner = it == terms_.end() ? 0.0 : it->second;
    if (std::abs(partner - std::conj(c)) > tol) return false;
  }
  return true;
}

namespace {

TrigInvariant combine_with_conjugate(const TrigInvariant& f, std::complex<double> self, std::complex<double> conj) {
  TrigInvariant out(f.weight_basis(), true);
  double scale = 0;
  for (const auto& [w, c] : f.terms()) scale = std::max(scale, std::abs(c));
  for (const auto& [w, c] : f.terms()) {
    TrigInvariant::Weight neg = w;
    for (auto& v : neg) v = -v;
    auto it = f.terms().find(neg);
    const std::complex<double> partner = it == f.terms().end() ? 0.0 : it->second;
    out.add_term(w, self * c + conj * std::conj(partner));
    if (it == f.terms().end()) out.add_term(neg, self * 0.0 + conj * std::conj(c));
  }
  // cancellation leftovers
  std::vector<TrigInvariant::Weight> tiny;
  for (const auto& [w, c] : out.terms())
    if (std::abs(c) < 1e-15 * std::max(1.0, scale)) tiny.push_back(w);
  for (const auto& w : tiny) out.erase_term(w);
  return out;
}

}  // namespace

TrigInvariant TrigInvariant::real_part() const { return combine_with_conjugate(*this, 0.5, 0.5); }

TrigInvariant TrigInvariant::imag_part() const {
  const std::complex<double> inv2i(0, -0.5);
  return combine_with_conjugate(*this, inv2i, -inv2i);
}

std::complex<double> TrigInvariant::evaluate(const Point& x) const {
  std::vector<Point> basis;
  for (const auto& b : basis_) basis.push_back(to_point(b));
  std::complex<double> s = 0;
  for (const auto& [w, c] : terms_) {
    double phase = 0;
    for (std::size_t k = 0; k < w.size(); ++k) phase += static_cast<double>(w[k]) * basis[k].dot(x);
    s += c * std::polar(1.0, kTwoPi * phase);
  }
  return s;
}

TrigInvariant TrigInvariant::embed(std::size_t offset, std::size_t ambient) const {
  std::vector<Vector> basis;
  for (const auto& b : basis_) {
    if (offset + b.size() > ambient) throw Error("embedding exceeds the ambient dimension");
    Vector v = zeros(ambient);
    std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
    basis.push_back(std::move(v));
  }
  TrigInvariant out(std::move(basis), real_);
  out.terms_ = terms_;
  return out;
}

// ---------------------------------------------------------------------------
// Invariant

Invariant::Invariant(Polynomial p) : fn_(std::move(p)) { compile(); }

Invariant::Invariant(TrigInvariant t) : fn_(std::move(t)) {
  if (!trig().real()) throw Error("invariant functions must be real-valued; take real_part() or imag_part()");
  compile();
}

void Invariant::compile() {
  if (is_polynomial()) {
    const auto& p = polynomial();
    dim_ = p.variables();
    for (const auto& [e, c] : p.terms()) {
      monomials_.push_back({c.to_double(), e});
      for (int k : e) max_exp_ = std::max(max_exp_, k);
    }
  } else {
    const auto& t = trig();
    dim_ = t.dim();
    std::vector<Point> basis;
    for (const auto& b : t.weight_basis()) basis.push_back(to_point(b));
    for (const auto& [w, c] : t.terms()) {
      Point f = Point::Zero(static_cast<Eigen::Index>(dim_));
      for (std::size_t k = 0; k < w.size(); ++k) f += static_cast<double>(w[k]) * basis[k];
      waves_.push_back({c, kTwoPi * f});
    }
  }
}

namespace {

// pw(i, k) = x_i^k
Eigen::MatrixXd power_table(const Point& x, int max_exp) {
  Eigen::MatrixXd pw(x.size(), max_exp + 1);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    pw(i, 0) = 1;
    for (int k = 1; k <= max_exp; ++k) pw(i, k) = pw(i, k - 1) * x(i);
  }
  return pw;
}

}  // namespace

double Invariant::value(const Point& x) const {
  if (static_cast<std::size_t>(x.size()) != dim_) throw Error("point dimension mismatch");
  double s = 0;
  if (is_polynomial()) {
    auto pw = power_table(x, max_exp_);
    for (const auto& m : monomials_) {
      double t = m.coef;
      for (std::size_t i = 0; i < m.exp.size(); ++i) t *= pw(static_cast<Eigen::Index>(i), m.exp[i]);
      s += t;
    }
  } else {
    for (const auto& w : waves_) s += (w.coef * std::polar(1.0, w.frequency.dot(x))).real();
  }
  return s;
}

Point Invariant::gradient(const Point& x) const {
  if (static_cast<std::size_t>(x.size()) != dim_) throw Error("point dimension mismatch");
  Point g = Point::Zero(x.size());
  if (is_polynomial()) {
    auto pw = power_table(x, max_exp_);
    for (const auto& m : monomials_) {
      for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        double t = m.coef * m.exp[i];
        for (std::size_t j = 0; j < m.exp.size(); ++j)
          t *= pw(static_cast<Eigen::Index>(j), j == i ? m.exp[j] - 1 : m.exp[j]);
        g(static_cast<Eigen::Index>(i)) += t;
      }
    }
  } else {
    const std::complex<double> I(0, 1);
    for (const auto& w : waves_) {
      const double re = (I * w.coef * std::polar(1.0, w.frequency.dot(x))).real();
      g += re * w.frequency;
    }
  }
  return g;
}

Eigen::MatrixXd Invariant::hessian(const Point& x) const {
  if (static_cast<std::size_t>(x.size()) != dim_) throw Error("point dimension mismatch");
  const auto n = x.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  if (is_polynomial()) {
    auto pw = power_table(x, max_exp_);
    for (const auto& m : monomials_) {
      for (Eigen::Index i = 0; i < n; ++i) {
        if (m.exp[static_cast<std::size_t>(i)] == 0) continue;
        for (Eigen::Index j = i; j < n; ++j) {
          std::vector<int> e = m.exp;
          double t = m.coef * e[static_cast<std::size_t>(i)];
          e[static_cast<std::size_t>(i)] -= 1;
          if (e[static_cast<std::size_t>(j)] == 0) continue;
          t *= e[static_cast<std::size_t>(j)];
          e[static_cast<std::size_t>(j)] -= 1;
          for (Eigen::Index k = 0; k < n; ++k) t *= pw(k, e[static_cast<std::size_t>(k)]);
          h(i, j) += t;
          if (j != i) h(j, i) += t;
        }
      }
    }
  } else {
    for (const auto& w : waves_) {
      const double re = -(w.coef * std::polar(1.0, w.frequency.dot(x))).real();
      h += re * w.frequency * w.frequency.transpose();
    }
  }
  return h;
}

double Invariant::laplacian(const Point& x) const { return hessian(x).trace(); }

Invariant Invariant::embed(std::size_t offset, std::size_t ambient) const {
  if (is_polynomial()) return Invariant(polynomial().embed(offset, ambient));
  return Invariant(trig().embed(offset, ambient));
}

std::vector<int> GeneratorSystem::degrees() const {
  std::vector<int> out;
  for (const auto& i : info) out.push_back(i.degree);
  return out;
}

// ---------------------------------------------------------------------------
// Construction

Polynomial reynolds(const Polynomial& p, const FiniteCoxeterGroup& group) {
  if (p.variables() != group.dim()) throw Error("polynomial and group dimensions differ");
  const auto& elements = group.elements();
  Polynomial out(p.variables());
  for (const auto& w : elements) out = out + p.compose(w);
  return out.scaled(Scalar(1) / Scalar(static_cast<long long>(elements.size())));
}

Polynomial reynolds(const Polynomial&, const AffineWeylGroup&) {
  throw NotFinite("the Reynolds operator needs a finite group");
}

Vector designated_point(const RootSystem& rs, bool affine) {
  Vector rho = zeros(rs.ambient_dim());
  for (const auto& w : fundamental_weights(rs)) rho = rho + w;
  if (affine) return (Scalar(1) / (Scalar(2) * dot(rho, rs.highest_root()))) * rho;
  const double n = std::sqrt(dot(rho, rho).to_double());
  return Scalar(1.0 / n) * rho;
}

void jacobian_certificate(const std::vector<Invariant>& gens, const std::vector<Vector>& basis, const Point& x,
                          std::size_t& rank, double& det) {
  Eigen::MatrixXd b = basis_matrix(basis);
  Eigen::MatrixXd j(gens.size(), b.cols());
  for (std::size_t k = 0; k < gens.size(); ++k)
    j.row(static_cast<Eigen::Index>(k)) = (b.transpose() * gens[k].gradient(x)).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * top) ++rank;
  det = j.rows() == j.cols() && j.rows() > 0 ? std::abs(j.determinant()) : 0.0;
}

GeneratorSystem chevalley_generators(const FiniteCoxeterGroup& group) {
  const RootSystem& rs = group.root_system();
  const std::size_t r = rs.rank();
  const std::vector<Vector> span = orthogonalize(rs.simple_roots());
  const Eigen::MatrixXd b = basis_matrix(span);
  const Point x0 = to_point(designated_point(rs, false));

  // Candidate families per degree, in order of preference.
  std::vector<std::vector<Vector>> families{span};
  {
    std::map<std::string, std::vector<Vector>> by_length;
    for (const auto& a : rs.positive_roots()) by_length[key_of(Vector{dot(a, a)})].push_back(a);
    for (auto& [k, roots] : by_length) families.push_back({roots.front()});
    for (const auto& w : fundamental_weights(rs)) families.push_back({w});
  }

  const auto classified = rs.classified_degrees();
  const int bound = 2 * (classified.empty() ? 30 : *std::max_element(classified.begin(), classified.end()));

  GeneratorSystem sys;
  sys.label = rs.label();
  sys.designated_point = x0;
  std::vector<Point> rows;
  for (int d = 2; d <= bound && rows.size() < r; ++d) {
    for (const auto& fam : families) {
      if (rows.size() == r) break;
      Polynomial p = averaged_power_sum(group, fam, d);
      if (p.is_zero()) continue;
      Invariant f(p);
      rows.push_back(f.gradient(x0));
      if (normalized_rank(rows, b) < rows.size()) {
        rows.pop_back();
        continue;
      }
      sys.generators.push_back(std::move(f));
      sys.info.push_back({d, -1, "real"});
    }
  }
  if (rows.size() < r)
    throw IndependenceFailure("no independent invariant system up to degree " + std::to_string(bound) + " for " +
                              rs.label());
  jacobian_certificate(sys.generators, span, x0, sys.jacobian_rank, sys.jacobian_det);
  return sys;
}

TrigInvariant averaging_operator(const TrigInvariant::Weight& gamma, const AffineWeylGroup& group) {
  const RootSystem& rs = group.root_system();
  if (gamma.size() != static_cast<std::size_t>(rs.rank())) throw WeightNotInLattice("weight has the wrong number of coordinates");
  auto orbit = weight_orbit(rs, gamma);
  // Real-valued exactly when the orbit is closed under negation.
  std::set<TrigInvariant::Weight> members(orbit.begin(), orbit.end());
  bool real = true;
  for (auto w : orbit) {
    for (auto& v : w) v = -v;
    real = real && members.count(w);
  }
  TrigInvariant out(group.weight_lattice().basis, real);
  const double c = 1.0 / static_cast<double>(orbit.size());
  for (const auto& w : orbit) out.add_term(w, c);
  return out;
}

TrigInvariant averaging_operator(const Vector& gamma, const AffineWeylGroup& group) {
  const RootSystem& rs = group.root_system();
  if (gamma.size() != rs.ambient_dim()) throw WeightNotInLattice("weight has the wrong dimension");
  TrigInvariant::Weight coords;
  Vector rebuilt = zeros(gamma.size());
  const auto& basis = group.weight_lattice().basis;
  for (int j = 0; j < rs.rank(); ++j) {
    Scalar c = dot(gamma, rs.simple_coroots()[j]);
    if (!c.exact() || !c.is_integer()) throw WeightNotInLattice("weight pairs non-integrally with a coroot");
    coords.push_back(static_cast<long long>(c.round()));
    rebuilt = rebuilt + c * basis[j];
  }
  if (rebuilt != gamma) throw WeightNotInLattice("weight leaves the span of the roots");
  return averaging_operator(coords, group);
}

std::vector<int> weight_involution(const AffineWeylGroup& group) {
  const RootSystem& rs = group.root_system();
  const std::size_t n = rs.rank();
  std::vector<int> rho(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    TrigInvariant::Weight w(n, 0);
    w[i] = -1;
    auto d = dominant_of(rs, w);
    for (std::size_t j = 0; j < n; ++j) {
      TrigInvariant::Weight e(n, 0);
      e[j] = 1;
      if (d == e) rho[i] = static_cast<int>(j);
    }
    if (rho[i] < 0) throw InvolutionNotFound("-gamma_" + std::to_string(i + 1) + " is not conjugate to a fundamental weight");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (rho[static_cast<std::size_t>(rho[i])] != static_cast<int>(i)) throw InvolutionNotFound("weight map is not an involution");
  return rho;
}

GeneratorSystem real_generators(const AffineWeylGroup& group) {
  const RootSystem& rs = group.root_system();
  const std::size_t n = rs.rank();
  auto rho = weight_involution(group);

  std::vector<int> fixed, pairs;
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i] == static_cast<int>(i)) fixed.push_back(static_cast<int>(i));
    else if (static_cast<int>(i) < rho[i]) pairs.push_back(static_cast<int>(i));
  }

  auto x = [&](int i) {
    TrigInvariant::Weight w(n, 0);
    w[static_cast<std::size_t>(i)] = 1;
    return averaging_operator(w, group);
  };

  GeneratorSystem sys;
  sys.label = rs.label();
  sys.affine = true;
  sys.involution = rho;
  sys.p = static_cast<int>(fixed.size());
  sys.q = static_cast<int>(pairs.size());
  for (int i : fixed) {
    sys.generators.emplace_back(x(i).real_part());
    sys.info.push_back({0, i, "real"});
  }
  for (int i : pairs) {
    sys.generators.emplace_back(x(i).real_part());
    sys.info.push_back({0, i, "re"});
  }
  // y_{p+q+k} = Im x_{rho(i)}: the partner of the k-th pair.
  for (int i : pairs) {
    const int j = rho[static_cast<std::size_t>(i)];
    sys.generators.emplace_back(x(j).imag_part());
    sys.info.push_back({0, j, "im"});
  }
  sys.designated_point = to_point(designated_point(rs, true));
  jacobian_certificate(sys.generators, orthogonalize(rs.simple_roots()), sys.designated_point, sys.jacobian_rank,
                       sys.jacobian_det);
  return sys;
}

}  // namespace coxinv
