#include "symq/qcoeff.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace symq {

namespace {

using Coeffs = std::vector<Rational>;

void trim_high(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed); a is overwritten.
void poly_rem_inplace(Coeffs& a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  const Rational& lb = b.back();
  trim_high(a);
  while (a.size() >= b.size()) {
    Rational factor = a.back() / lb;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim_high(a);
  }
}

// Exact quotient a / b of ordinary polynomials; returns false if b does not
// divide a.
bool poly_divides(const Coeffs& a, const Coeffs& b, Coeffs& quotient) {
  Coeffs rem = a;
  trim_high(rem);
  if (rem.empty()) {
    quotient.clear();
    return true;
  }
  if (rem.size() < b.size()) return false;
  const std::size_t db = b.size() - 1;
  quotient.assign(rem.size() - db, Rational(0));
  const Rational& lb = b.back();
  while (rem.size() >= b.size()) {
    Rational factor = rem.back() / lb;
    const std::size_t shift = rem.size() - 1 - db;
    quotient[shift] = factor;
    for (std::size_t i = 0; i < db; ++i) rem[shift + i] -= factor * b[i];
    rem.pop_back();
    trim_high(rem);
  }
  trim_high(quotient);
  return rem.empty();
}

void make_monic(Coeffs& a) {
  if (a.empty()) return;
  Rational inv = 1 / a.back();
  for (auto& c : a) c *= inv;
}

bool is_valid_integer_text(const std::string& s, std::size_t begin, std::size_t end, bool allow_sign) {
  if (begin >= end) return false;
  if (allow_sign && s[begin] == '-') ++begin;
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_valid_integer_text(s, 0, s.size(), true)) {
      throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    return Rational(Integer(s));
  }
  if (!is_valid_integer_text(s, 0, slash, true) ||
      !is_valid_integer_text(s, slash + 1, s.size(), false)) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim_high(a);
  trim_high(b);
  while (!b.empty()) {
    make_monic(b);
    poly_rem_inplace(a, b);
    std::swap(a, b);
  }
  make_monic(a);
  return a;
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(int c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v != 0) coeffs_.push_back(std::move(v));
}

// Callers may hand in unreduced fractions such as Rational(6, 10).
QPoly::QPoly(int offset, std::vector<Rational> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

QPoly QPoly::monomial(const Rational& c, int exponent) {
  return QPoly(exponent, {c});
}

void QPoly::normalize() {
  trim_high(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ += static_cast<int>(lead);
  }
}

bool QPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && offset_ == 0);
}

int QPoly::high_degree() const {
  return coeffs_.empty() ? 0 : offset_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational QPoly::coeff(int exponent) const {
  const long idx = static_cast<long>(exponent) - offset_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(idx)];
}

const Rational& QPoly::leading_coeff() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(offset_, rhs.offset_);
  const int hi = std::max(high_degree(), rhs.high_degree());
  if (lo < offset_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), Rational(0));
    offset_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(rhs.offset_ - lo) + i] += rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) { return *this += -rhs; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(a.offset_ + b.offset_, std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    offset_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::bar() const {
  if (is_zero()) return *this;
  QPoly r;
  r.offset_ = -high_degree();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

QPoly QPoly::shifted(int k) const {
  QPoly r = *this;
  if (!r.is_zero()) r.offset_ += k;
  return r;
}

Rational QPoly::evaluate(const Rational& q) const {
  if (is_zero()) return 0;
  if (q == 0) {
    if (offset_ < 0) throw DivisionByZero("Laurent polynomial evaluated at q = 0");
    return offset_ == 0 ? coeffs_.front() : Rational(0);
  }
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  Rational power = 1;
  const int e = offset_ < 0 ? -offset_ : offset_;
  for (int i = 0; i < e; ++i) power *= q;
  return offset_ < 0 ? Rational(acc / power) : Rational(acc * power);
}

QPoly QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return QPoly();
  Coeffs quotient;
  if (!poly_divides(coeffs_, d.coeffs_, quotient)) {
    throw std::domain_error("inexact polynomial division: " + to_string() + " by " + d.to_string());
  }
  return QPoly(offset_ - d.offset_, std::move(quotient));
}

bool QPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool QPoly::is_nonneg() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const int e = offset_ + static_cast<int>(i);
    std::string term;
    if (e == 0) {
      term = rational_to_string(c);
    } else {
      if (c == 1) {
        term = "";
      } else if (c == -1) {
        term = "-";
      } else {
        term = rational_to_string(c);
      }
      term += "q";
      if (e != 1) term += "^" + std::to_string(e);
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

// ----------------------------------------------------------------- QRat

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

void QRat::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  Coeffs n = num_.coeffs();
  Coeffs d = den_.coeffs();
  int num_offset = num_.offset() - den_.offset();

  if (d.size() > 1 && n.size() > 1) {
    Coeffs g = poly_gcd(n, d);
    if (g.size() > 1) {
      Coeffs nq, dq;
      poly_divides(n, g, nq);
      poly_divides(d, g, dq);
      n = std::move(nq);
      d = std::move(dq);
    }
  }

  // Integer denominator with content 1 and positive leading coefficient.
  Integer lcm_den = 1;
  for (const auto& c : d) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : d) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(lcm_den, content);
  scale.canonicalize();
  if (d.back() < 0) scale = -scale;
  if (scale != 1) {
    for (auto& c : d) c *= scale;
    for (auto& c : n) c *= scale;
  }
  num_ = QPoly(num_offset, std::move(n));
  den_ = QPoly(0, std::move(d));
}

bool QRat::is_one() const { return den_.is_constant() && num_ == QPoly(1); }

QPoly QRat::as_poly() const {
  if (!is_polynomial()) throw std::domain_error("not a Laurent polynomial: " + to_string());
  return num_;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = QPoly(1);
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& rhs) { return *this += -rhs; }

QRat& QRat::operator*=(const QRat& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = QRat();
  const bool poly = den_.is_constant() && rhs.den_.is_constant();
  num_ *= rhs.num_;
  if (!poly) {
    den_ *= rhs.den_;
    canonicalize();
  }
  return *this;
}

QRat& QRat::operator/=(const QRat& rhs) { return *this *= rhs.inverse(); }

QRat& QRat::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = QPoly(1);
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return QRat(den_, num_);
}

QRat QRat::bar() const { return QRat(num_.bar(), den_.bar()); }

Rational QRat::evaluate(const Rational& q) const {
  Rational d = den_.evaluate(q);
  if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
  return num_.evaluate(q) / d;
}

std::string QRat::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.span() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.span() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

QRat arith(const QRat& a, const QRat& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
      if (b.is_zero()) throw DivisionByZero("division by zero rational function");
      return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  return QPoly(0, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

QPoly q_factorial(int n) {
  QPoly r(1);
  for (int i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly q_pochhammer(int n) {
  QPoly r(1);
  for (int i = 1; i <= n; ++i) r *= QPoly(1) - QPoly::q_power(i);
  return r;
}

QPoly series_prefix(const QRat& a, int k) {
  if (k < 0) throw std::invalid_argument("series_prefix: negative length");
  if (a.is_zero() || k == 0) return QPoly();
  if (a.num().offset() < 0) throw std::domain_error("series_prefix: pole at q = 0");
  const auto& d = a.den().coeffs();
  const Rational d0_inv = 1 / d.front();
  std::vector<Rational> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Rational acc = a.num().coeff(i);
    for (int j = 1; j <= i && j < static_cast<int>(d.size()); ++j) {
      acc -= d[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(i - j)];
    }
    out[static_cast<std::size_t>(i)] = acc * d0_inv;
  }
  return QPoly(0, std::move(out));
}

bool is_nonneg_poly(const QRat& a) { return a.is_polynomial() && a.num().is_nonneg(); }

}  // namespace symq
