#pragma once

// Exact scalars over Q and Q(sqrt 5), and dense exact matrices.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "coxcat/errors.hpp"

namespace coxcat {

enum class FieldKind { Rational, QSqrt5 };

/// An exact real number a + b*sqrt(5) with rational a, b.
///
/// RATIONAL values always have b == 0. Mixed arithmetic promotes to QSQRT5.
/// Equality and hashing look only at the value, so a QSQRT5 scalar with
/// b == 0 is equal to (and hashes like) the rational with the same a.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  explicit FieldScalar(mpq_class value) : a_(std::move(value)) { a_.canonicalize(); }
  FieldScalar(mpq_class a, mpq_class b);

  static FieldScalar rational(long num, long den = 1);
  /// (a_num/a_den) + (b_num/b_den) sqrt 5.
  static FieldScalar qsqrt5(long a_num, long a_den, long b_num, long b_den);
  /// Parses the canonical text form produced by to_string().
  static FieldScalar parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt5_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational_value() const { return sgn(b_) == 0; }
  /// Sign of the real value: -1, 0 or +1.
  int sign() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  friend bool operator==(const FieldScalar& x, const FieldScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const FieldScalar& x, const FieldScalar& y) { return (x - y).sign() < 0; }

  /// "3/2", "-1", "1/2+1/2r5", "-1r5".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  mpq_class a_;
  mpq_class b_;
  FieldKind kind_ = FieldKind::Rational;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Functional form of the four field operations; Div by zero throws ArithmeticError.
FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ArithOp op);

struct FieldScalarHash {
  std::size_t operator()(const FieldScalar& s) const { return s.hash(); }
};

struct ExactVectorHash {
  std::size_t operator()(const std::vector<FieldScalar>& v) const;
};

/// Dense row-major matrix of FieldScalar.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix transpose() const;
  FieldKind kind() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldScalar> data_;
};

/// Rank by exact Gaussian elimination (pivot = first nonzero entry of the column).
std::size_t mat_rank(ExactMatrix m);

}  // namespace coxcat
