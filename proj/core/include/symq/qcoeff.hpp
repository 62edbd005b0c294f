#pragma once

// Exact coefficient domain: Laurent polynomials and reduced rational
// functions in q over arbitrary-precision rationals.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace symq {

using Rational = mpq_class;
using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// "a/b", with "/b" omitted when b == 1.
std::string rational_to_string(const Rational& r);
/// Inverse of rational_to_string; throws std::invalid_argument.
Rational rational_from_string(const std::string& s);

/// Laurent polynomial sum_i coeffs[i] q^(offset + i).
///
/// Either coeffs is empty (zero) or both its first and last entries are
/// nonzero, so structural equality is value equality.
class QPoly {
 public:
  QPoly() = default;
  QPoly(int c);  // NOLINT(google-explicit-constructor)
  QPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  QPoly(int offset, std::vector<Rational> coeffs);

  static QPoly monomial(const Rational& c, int exponent);
  /// q^exponent
  static QPoly q_power(int exponent) { return monomial(Rational(1), exponent); }

  int offset() const { return offset_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  /// Lowest and highest exponent carrying a nonzero coefficient; zero for the
  /// zero polynomial.
  int low_degree() const { return offset_; }
  int high_degree() const;
  /// Number of stored coefficients (high - low + 1).
  std::size_t span() const { return coeffs_.size(); }
  Rational coeff(int exponent) const;
  const Rational& leading_coeff() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
  }

  /// q -> q^-1
  QPoly bar() const;
  /// Multiply by q^k.
  QPoly shifted(int k) const;
  Rational evaluate(const Rational& q) const;

  /// Exact quotient of *this by d; throws std::domain_error when d does not
  /// divide *this in Q[q^{+-1}].
  QPoly exact_div(const QPoly& d) const;

  bool has_integer_coeffs() const;
  bool is_nonneg() const;

  /// Human form, lowest power first: "1+q+2q^2", "-q^-1+1/2q".
  std::string to_string() const;

 private:
  void normalize();

  int offset_ = 0;
  std::vector<Rational> coeffs_;
};

/// Reduced rational function num/den.
///
/// Canonical form: den has offset 0 (so den(0) != 0), integer coefficients
/// with content 1 and positive leading coefficient; gcd(num, den) = 1.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero if den is zero.
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }
  /// Throws std::domain_error unless is_polynomial().
  QPoly as_poly() const;

  QRat operator-() const;
  QRat& operator+=(const QRat& rhs);
  QRat& operator-=(const QRat& rhs);
  QRat& operator*=(const QRat& rhs);
  QRat& operator/=(const QRat& rhs);
  QRat& operator*=(const Rational& c);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend QRat operator*(QRat a, const Rational& c) { return a *= c; }
  friend QRat operator*(const Rational& c, QRat a) { return a *= c; }

  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QRat inverse() const;
  QRat bar() const;
  /// Value at a rational point; throws DivisionByZero at a pole.
  Rational evaluate(const Rational& q) const;

  /// "num" when polynomial, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();

  QPoly num_;
  QPoly den_;
};

enum class ArithOp { add, sub, mul, div };

QRat arith(const QRat& a, const QRat& b, ArithOp op);

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
QPoly q_int(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(int n);

/// prod_{i=1}^{n} (1 - q^i)
QPoly q_pochhammer(int n);

/// Truncation of the power series of a to degrees < k. Throws
/// std::domain_error if a has a pole at q = 0.
QPoly series_prefix(const QRat& a, int k);

/// True iff a is a Laurent polynomial with all coefficients >= 0.
bool is_nonneg_poly(const QRat& a);

/// gcd in Q[q] of two ordinary polynomials given by coefficient vectors
/// (index = degree); the result is monic, empty for gcd(0, 0).
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b);

}  // namespace symq
