#pragma once

// Scalars that stay exact (rational) until they meet a floating-point value,
// plus the small dense linear algebra the group machinery needs.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace coxinv {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// A number that is either an exact rational or a double.
///
/// Arithmetic between two exact values is exact; any operation touching a
/// double produces a double. Crystallographic root data lives entirely in
/// the exact half, non-crystallographic dihedral data in the float half.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(long long v) : value_(Rational(v)) {}
  Scalar(const Rational& v) : value_(v) {}
  Scalar(double v) : value_(v) {}
  static Scalar fraction(long long num, long long den);

  bool exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;
  double to_double() const;

  bool is_zero() const;
  bool is_integer() const;
  /// Nearest integer (ties away from zero). Exact inputs round exactly.
  BigInt round() const;
  BigInt floor() const;
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  std::string str() const;

 private:
  std::variant<Rational, double> value_;
};

Scalar abs(const Scalar& s);

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  Matrix transpose() const;
  bool exact() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Scalar dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
bool all_exact(const Vector& v);
Vector to_scalars(const std::vector<double>& v);
std::vector<double> to_doubles(const Vector& v);

/// Rank by Gaussian elimination (exact for exact input; pivots below 1e-12
/// relative are treated as zero otherwise).
std::size_t rank(const Matrix& m);

/// Solves a * x = b for each right-hand side; nullopt when a is singular.
std::optional<std::vector<Vector>> solve(const Matrix& a, const std::vector<Vector>& rhs);

/// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

/// Gram-Schmidt without normalisation; dependent vectors are dropped.
/// Exact inputs give exact pairwise-orthogonal outputs.
std::vector<Vector> orthogonalize(const std::vector<Vector>& vs);

/// Smith normal form diagonal of an integer matrix (nonzero invariant factors).
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> m);

/// Canonical text key for hashing/deduplication: exact entries verbatim,
/// inexact ones snapped to a 1e-9 grid.
std::string key_of(const Vector& v);
std::string key_of(const Matrix& m);

}  // namespace coxinv
