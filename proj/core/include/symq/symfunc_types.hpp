#pragma once

// Value types for elements of the ring of symmetric functions over Q(q).

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "symq/partition.hpp"
#include "symq/qcoeff.hpp"

namespace symq {

/// m, e, h, s, p are handled by the symfunc layer; P, Q (Hall-Littlewood)
/// and S (big Schur) by the hl layer.
enum class Basis { m, e, h, s, p, P, Q, S };

std::string basis_name(Basis b);
/// Throws std::invalid_argument for an unknown name.
Basis basis_from_name(const std::string& name);
bool is_classical(Basis b);

/// Sparse expansion sum_lambda c_lambda B_lambda in one basis. Zero
/// coefficients are never stored; terms iterate in canonical partition order.
class SymFunc {
 public:
  using Terms = std::map<Partition, QRat>;

  explicit SymFunc(Basis basis = Basis::p) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  static SymFunc basis_element(Basis basis, const Partition& lambda, const QRat& c = QRat(1));
  static SymFunc constant(const QRat& c, Basis basis = Basis::p);

  Basis basis() const { return basis_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  QRat coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  /// The common size of all keys, or nullopt for mixed (or zero) elements.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  void add_term(const Partition& lambda, const QRat& c);

  SymFunc& operator+=(const SymFunc& rhs);
  SymFunc& operator-=(const SymFunc& rhs);
  SymFunc& operator*=(const QRat& c);
  SymFunc operator-() const;
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const QRat& c) { return a *= c; }
  friend SymFunc operator*(const QRat& c, SymFunc a) { return a *= c; }

  /// Same basis tag and identical terms.
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  /// Expression form, e.g. "s[2] + (1+q)*s[1,1]".
  std::string to_string() const;

 private:
  void check_same_basis(const SymFunc& rhs) const;

  Basis basis_;
  Terms terms_;
};

/// Element of Lambda_q (x) Lambda_q, each leg in its own basis.
class TensorSymFunc {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, QRat>;

  TensorSymFunc(Basis left = Basis::p, Basis right = Basis::p) : bases_(left, right) {}

  std::pair<Basis, Basis> bases() const { return bases_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  QRat coeff(const Partition& a, const Partition& b) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Partition& a, const Partition& b, const QRat& c);

  friend bool operator==(const TensorSymFunc& a, const TensorSymFunc& b) {
    return a.bases_ == b.bases_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::pair<Basis, Basis> bases_;
  Terms terms_;
};

/// Graded multiplicities [M : L_mu]_q of a graded S_n-module.
struct GradedCharacter {
  int n = 0;
  std::map<Partition, QRat> mult;

  /// Stored multiplicity, zero if absent. Throws std::invalid_argument when
  /// |mu| != n.
  QRat at(const Partition& mu) const;
  void set(const Partition& mu, const QRat& value);

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
    return a.n == b.n && a.mult == b.mult;
  }
};

}  // namespace symq
