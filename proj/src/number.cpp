#include "coxinv/number.hpp"

#include "coxinv/errors.hpp"

#include <cmath>
#include <sstream>

namespace coxinv {

namespace {

constexpr double kFloatZero = 1e-12;

bool both_exact(const Scalar& a, const Scalar& b) { return a.exact() && b.exact(); }

}  // namespace

Scalar Scalar::fraction(long long num, long long den) {
  if (den == 0) throw Error("zero denominator");
  return Scalar(Rational(num, den));
}

const Rational& Scalar::rational() const {
  if (!exact()) throw Error("rational() requested from an inexact scalar");
  return std::get<Rational>(value_);
}

double Scalar::to_double() const {
  if (exact()) return static_cast<double>(std::get<Rational>(value_));
  return std::get<double>(value_);
}

bool Scalar::is_zero() const {
  if (exact()) return std::get<Rational>(value_) == 0;
  return std::abs(std::get<double>(value_)) <= kFloatZero;
}

bool Scalar::is_integer() const {
  if (exact()) return denominator(std::get<Rational>(value_)) == 1;
  double d = std::get<double>(value_);
  return std::abs(d - std::round(d)) <= kFloatZero;
}

BigInt Scalar::floor() const {
  if (exact()) {
    const Rational& q = std::get<Rational>(value_);
    BigInt n = numerator(q), d = denominator(q);
    BigInt f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
  }
  return BigInt(static_cast<long long>(std::floor(std::get<double>(value_))));
}

BigInt Scalar::round() const {
  if (exact()) {
    const Rational& q = std::get<Rational>(value_);
    Rational shifted = q < 0 ? q - Rational(1, 2) : q + Rational(1, 2);
    BigInt n = numerator(shifted), d = denominator(shifted);
    return n / d;  // toward zero after the half shift
  }
  return BigInt(static_cast<long long>(std::llround(std::get<double>(value_))));
}

int Scalar::sign() const {
  if (exact()) {
    const Rational& q = std::get<Rational>(value_);
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
  }
  double d = std::get<double>(value_);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

Scalar Scalar::operator-() const {
  if (exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (both_exact(*this, o))
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  else
    value_ = to_double() + o.to_double();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (both_exact(*this, o))
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  else
    value_ = to_double() - o.to_double();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (both_exact(*this, o))
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  else
    value_ = to_double() * o.to_double();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (both_exact(*this, o)) {
    if (std::get<Rational>(o.value_) == 0) throw Error("division by exact zero");
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (both_exact(a, b)) return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
  return a.to_double() == b.to_double();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (both_exact(a, b)) return std::get<Rational>(a.value_) < std::get<Rational>(b.value_);
  return a.to_double() < b.to_double();
}

std::string Scalar::str() const {
  if (exact()) return std::get<Rational>(value_).str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  return os.str();
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::exact() const {
  for (const auto& s : data_)
    if (!s.exact()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.exact() && aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw Error("matrix/vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool all_exact(const Vector& v) {
  for (const auto& x : v)
    if (!x.exact()) return false;
  return true;
}

Vector to_scalars(const std::vector<double>& v) { return Vector(v.begin(), v.end()); }

std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
  double scale = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) scale = std::max(scale, std::abs(m(i, j).to_double()));
  const double tol = 1e-12 * std::max(1.0, scale);

  auto negligible = [&](const Scalar& s) {
    return s.exact() ? s.is_zero() : std::abs(s.to_double()) <= tol;
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    double best_abs = -1;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (negligible(m(i, c))) continue;
      if (m(i, c).exact()) {
        best = i;
        break;
      }
      double a = std::abs(m(i, c).to_double());
      if (a > best_abs) best_abs = a, best = i;
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    Scalar piv = m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) /= piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

std::optional<std::vector<Vector>> solve(const Matrix& a, const std::vector<Vector>& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error("solve: matrix not square");
  Matrix aug(n, n + rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t k = 0; k < rhs.size(); ++k) aug(i, n + k) = rhs[k].at(i);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<Vector> out(rhs.size(), Vector(n));
  for (std::size_t k = 0; k < rhs.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) out[k][i] = aug(i, n + k);
  return out;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> orthogonalize(const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    Vector w = v;
    for (const auto& u : out) w = w - (dot(w, u) / dot(u, u)) * u;
    bool zero = true;
    for (const auto& x : w) {
      if (x.exact() ? !x.is_zero() : std::abs(x.to_double()) > 1e-10) {
        zero = false;
        break;
      }
    }
    if (!zero) out.push_back(std::move(w));
  }
  return out;
}

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition for the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::string key_of(const Vector& v) {
  std::string key;
  for (const auto& x : v) {
    if (x.exact())
      key += x.rational().str();
    else
      key += "~" + std::to_string(std::llround(x.to_double() * 1e9));
    key += ',';
  }
  return key;
}

std::string key_of(const Matrix& m) {
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i) key += key_of(m.row(i)) + ';';
  return key;
}

}  // namespace coxinv
