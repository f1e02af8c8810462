#include "coxcat/exactnum.hpp"

#include <functional>
#include <utility>

namespace coxcat {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = std::hash<int>{}(p->_mp_size);
  const int limbs = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
  for (int i = 0; i < limbs; ++i) h = mix(h, static_cast<std::size_t>(p->_mp_d[i]));
  return h;
}

std::size_t hash_mpq(const mpq_class& q) {
  return mix(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw ArithmeticError("empty rational literal");
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw ArithmeticError("malformed rational literal '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

FieldScalar::FieldScalar(mpq_class a, mpq_class b)
    : a_(std::move(a)), b_(std::move(b)), kind_(FieldKind::QSqrt5) {
  a_.canonicalize();
  b_.canonicalize();
}

FieldScalar FieldScalar::rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  return FieldScalar(mpq_class(num, den));
}

FieldScalar FieldScalar::qsqrt5(long a_num, long a_den, long b_num, long b_den) {
  if (a_den == 0 || b_den == 0) throw ArithmeticError("zero denominator");
  return FieldScalar(mpq_class(a_num, a_den), mpq_class(b_num, b_den));
}

FieldScalar FieldScalar::parse(std::string_view text) {
  constexpr std::string_view kRoot = "r5";
  if (text.size() < kRoot.size() || text.substr(text.size() - kRoot.size()) != kRoot) {
    return FieldScalar(parse_rational(text));
  }
  std::string_view body = text.substr(0, text.size() - kRoot.size());
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return FieldScalar(mpq_class(0), parse_rational(body));
  std::string_view b_text = body.substr(split);
  if (b_text.front() == '+') b_text.remove_prefix(1);
  return FieldScalar(parse_rational(body.substr(0, split)), parse_rational(b_text));
}

int FieldScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  const mpq_class a2 = a_ * a_;
  const mpq_class b2 = 5 * b_ * b_;
  if (a2 == b2) return 0;  // unreachable for rational a, b; sqrt 5 is irrational
  return a2 > b2 ? sa : sb;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  a_ += o.a_;
  if (o.kind_ == FieldKind::QSqrt5) {
    b_ += o.b_;
    kind_ = FieldKind::QSqrt5;
  }
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  a_ -= o.a_;
  if (o.kind_ == FieldKind::QSqrt5) {
    b_ -= o.b_;
    kind_ = FieldKind::QSqrt5;
  }
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  if (kind_ == FieldKind::Rational && o.kind_ == FieldKind::Rational) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b r)(c + d r) = (ac + 5bd) + (ad + bc) r
  mpq_class a = a_ * o.a_ + 5 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  kind_ = FieldKind::QSqrt5;
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (kind_ == FieldKind::Rational && o.kind_ == FieldKind::Rational) {
    a_ /= o.a_;
    return *this;
  }
  // 1/(c + d r) = (c - d r)/(c^2 - 5 d^2)
  const mpq_class norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
  FieldScalar conj(o.a_ / norm, -o.b_ / norm);
  return *this *= conj;
}

std::string FieldScalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) {
    out = a_.get_str();
    if (sgn(b_) > 0) out += '+';
  }
  out += b_.get_str();
  out += "r5";
  return out;
}

std::size_t FieldScalar::hash() const { return mix(hash_mpq(a_), hash_mpq(b_)); }

FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw ArithmeticError("unknown arithmetic operation");
}

std::size_t ExactVectorHash::operator()(const std::vector<FieldScalar>& v) const {
  std::size_t h = v.size();
  for (const auto& s : v) h = mix(h, s.hash());
  return h;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldScalar(1);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldKind ExactMatrix::kind() const {
  for (const auto& e : data_)
    if (e.kind() == FieldKind::QSqrt5) return FieldKind::QSqrt5;
  return FieldKind::Rational;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference: dimension mismatch");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

std::size_t mat_rank(ExactMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const FieldScalar inv = FieldScalar(1) / m(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, col).is_zero()) continue;
      const FieldScalar factor = m(i, col) * inv;
      for (std::size_t j = col; j < cols; ++j) {
        if (!m(rank, j).is_zero()) m(i, j) -= factor * m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace coxcat
