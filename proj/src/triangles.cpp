#include "coxcat/triangles.hpp"

#include <algorithm>

namespace coxcat {

namespace {

std::string term(const mpz_class& c, const std::string& mono, bool first) {
  std::string out;
  mpz_class a = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mono.empty() || a != 1) out += a.get_str();
  out += mono;
  return out;
}

std::string power(char var, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Poly1::Poly1(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1::Poly1(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly1::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void Poly1::add_to(int k, const mpz_class& v) {
  if (k < 0) throw ArgumentError("negative exponent");
  if (static_cast<int>(c_.size()) <= k) c_.resize(k + 1);
  c_[k] += v;
  trim();
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly1(std::move(c));
}

FieldScalar Poly1::eval(const FieldScalar& t) const {
  FieldScalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + FieldScalar(mpq_class(*it));
  return acc;
}

std::string Poly1::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    out += term(c_[k], power(var, static_cast<int>(k)), first);
    first = false;
  }
  return out;
}

BiPoly BiPoly::constant(long c) { return monomial(0, 0, c); }
BiPoly BiPoly::x() { return monomial(1, 0, 1); }
BiPoly BiPoly::y() { return monomial(0, 1, 1); }

BiPoly BiPoly::monomial(int kx, int ly, const mpz_class& c) {
  BiPoly p;
  p.add_to(kx, ly, c);
  return p;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t k = 0; k < c_.size(); ++k)
    for (std::size_t l = 0; l < c_[k].size(); ++l)
      if (c_[k][l] != 0) d = std::max(d, static_cast<int>(k + l));
  return d;
}

mpz_class BiPoly::coeff(int k, int l) const {
  if (k < 0 || l < 0 || k >= static_cast<int>(c_.size()) || l >= static_cast<int>(c_[k].size())) return 0;
  return c_[k][l];
}

void BiPoly::add_to(int k, int l, const mpz_class& v) {
  if (k < 0 || l < 0) throw ArgumentError("negative exponent");
  if (v == 0) return;
  if (static_cast<int>(c_.size()) <= k) c_.resize(k + 1);
  if (static_cast<int>(c_[k].size()) <= l) c_[k].resize(l + 1);
  c_[k][l] += v;
  trim();
}

void BiPoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    if (c_[k].size() < o.c_[k].size()) c_[k].resize(o.c_[k].size());
    for (std::size_t l = 0; l < o.c_[k].size(); ++l) c_[k][l] += o.c_[k][l];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    if (c_[k].size() < o.c_[k].size()) c_[k].resize(o.c_[k].size());
    for (std::size_t l = 0; l < o.c_[k].size(); ++l) c_[k][l] -= o.c_[k][l];
  }
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly c;
  if (a.is_zero() || b.is_zero()) return c;
  c.c_.resize(a.c_.size() + b.c_.size() - 1);
  const int dy = a.deg_y() + b.deg_y() + 1;
  for (auto& row : c.c_) row.resize(dy);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
      if (a.c_[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.c_.size(); ++k)
        for (std::size_t l = 0; l < b.c_[k].size(); ++l) c.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
    }
  c.trim();
  return c;
}

Poly1 BiPoly::at_y(long y0) const {
  std::vector<mpz_class> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    mpz_class acc = 0;
    for (auto it = c_[k].rbegin(); it != c_[k].rend(); ++it) acc = acc * y0 + *it;
    out[k] = acc;
  }
  return Poly1(std::move(out));
}

Poly1 BiPoly::at_x(long x0) const {
  std::vector<mpz_class> out(std::max(deg_y() + 1, 0));
  mpz_class xp = 1;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    for (std::size_t l = 0; l < c_[k].size(); ++l) out[l] += c_[k][l] * xp;
    xp *= x0;
  }
  return Poly1(std::move(out));
}

std::string BiPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  const int top = total_degree();
  for (int d = 0; d <= top; ++d) {
    for (int k = std::min(d, deg_x()); k >= 0; --k) {
      const mpz_class c = coeff(k, d - k);
      if (c == 0) continue;
      out += term(c, power('x', k) + power('y', d - k), first);
      first = false;
    }
  }
  return out;
}

std::vector<std::vector<mpz_class>> BiPoly::grid() const {
  if (c_.empty()) return {{mpz_class(0)}};
  const int dy = deg_y();
  std::vector<std::vector<mpz_class>> g(c_.size(), std::vector<mpz_class>(dy + 1));
  for (std::size_t k = 0; k < c_.size(); ++k)
    for (std::size_t l = 0; l < c_[k].size(); ++l) g[k][l] = c_[k][l];
  return g;
}

FieldScalar eval_at(const BiPoly& p, const FieldScalar& x0, const FieldScalar& y0) {
  FieldScalar acc;
  FieldScalar xp(1);
  for (int k = 0; k <= p.deg_x(); ++k) {
    FieldScalar row;
    for (int l = p.deg_y(); l >= 0; --l) row = row * y0 + FieldScalar(mpq_class(p.coeff(k, l)));
    acc += row * xp;
    xp *= x0;
  }
  return acc;
}

BiPoly binomial_expand(Base base, int power) {
  if (power < 0) throw ArgumentError("negative power");
  BiPoly p;
  for (int i = 0; i <= power; ++i) {
    switch (base) {
      case Base::XPlusY:
        p.add_to(i, power - i, binomial(power, i));
        break;
      case Base::OneMinusY:
        p.add_to(0, i, (i % 2 ? -1 : 1) * binomial(power, i));
        break;
      case Base::Y:
        if (i == power) p.add_to(0, power, 1);
        break;
    }
  }
  return p;
}

BiPoly bipoly_arith(const BiPoly& p, const BiPoly& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
  }
  throw ArgumentError("unknown polynomial operation");
}

}  // namespace coxcat
