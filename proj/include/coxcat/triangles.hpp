#pragma once

// Exact integer polynomials in one and two variables.

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coxcat/exactnum.hpp"

namespace coxcat {

/// Univariate integer polynomial, trailing zeros trimmed.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<mpz_class> coeffs);
  Poly1(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  void add_to(int k, const mpz_class& v);

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend bool operator==(const Poly1&, const Poly1&) = default;

  FieldScalar eval(const FieldScalar& t) const;
  /// e.g. "1 + 3y + y^2".
  std::string to_string(char var = 'y') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Bivariate integer polynomial sum c[k][l] x^k y^l, stored densely and
/// trimmed so that equality is coefficientwise.
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly constant(long c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(int kx, int ly, const mpz_class& c);

  int deg_x() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int deg_y() const;
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(int k, int l) const;
  void add_to(int k, int l, const mpz_class& v);
  /// Largest k + l over the nonzero coefficients (-1 for zero).
  int total_degree() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Substitute y = y0 (x kept) / x = x0 (y kept).
  Poly1 at_y(long y0) const;
  Poly1 at_x(long x0) const;

  /// e.g. "1 + 3x + 2y + 2x^2 + 2xy + y^2" (by total degree, x-heavy first).
  std::string to_string() const;
  /// Row k holds the coefficients of x^k (columns: powers of y), padded to
  /// a (deg_x+1) x (deg_y+1) grid. The zero polynomial renders as [[0]].
  std::vector<std::vector<mpz_class>> grid() const;

 private:
  void trim();
  std::vector<std::vector<mpz_class>> c_;  // c_[k] trimmed per row
};

/// Exact evaluation of p at (x0, y0).
FieldScalar eval_at(const BiPoly& p, const FieldScalar& x0, const FieldScalar& y0);

enum class Base { XPlusY, OneMinusY, Y };

/// base^power, expanded with binomial coefficients.
BiPoly binomial_expand(Base base, int power);

enum class PolyOp { Add, Sub, Mul };
BiPoly bipoly_arith(const BiPoly& p, const BiPoly& q, PolyOp op);

}  // namespace coxcat
