#pragma once

// Ordinary character theory of the symmetric groups.

#include <map>
#include <vector>

#include "symq/partition.hpp"
#include "symq/qcoeff.hpp"
#include "symq/symfunc_types.hpp"

namespace symq {

inline constexpr int kMaxCharTableN = 14;

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Character values chi^lambda(mu) of S_n. Rows are irreducible labels and
/// columns cycle types, both in partitions_of(n) order.
class CharTable {
 public:
  CharTable(int n, std::vector<Partition> labels, std::vector<std::vector<long long>> values);

  int n() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  std::size_t index_of(const Partition& lambda) const;
  long long value(const Partition& irrep, const Partition& cycle_type) const;
  long long value(std::size_t irrep, std::size_t cycle_type) const { return values_[irrep][cycle_type]; }
  long long dimension(const Partition& irrep) const;

 private:
  int n_;
  std::vector<Partition> labels_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<long long>> values_;
};

/// Cached per n (Murnaghan-Nakayama); throws std::out_of_range for n
/// outside [0, kMaxCharTableN]. Safe to call concurrently.
const CharTable& char_table(int n);

/// Single character value chi^lambda(mu) by rim-hook removal.
long long character_value(const Partition& lambda, const Partition& mu);

/// Branching rule: the labels lambda_{(j)} for the removable boxes of lambda.
std::vector<Partition> restrict_irrep(const Partition& lambda);

/// A class function of S_n with values in Q(q), keyed by cycle type.
class ClassFunction {
 public:
  explicit ClassFunction(int n);

  int n() const { return n_; }
  const QRat& at(const Partition& cycle_type) const;
  void set(const Partition& cycle_type, const QRat& value);
  const std::map<Partition, QRat>& values() const { return values_; }

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator*=(const QRat& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(ClassFunction a, const QRat& c) { return a *= c; }
  /// Pointwise product (character of the tensor product).
  friend ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b);

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::map<Partition, QRat> values_;
};

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction regular_character(int n);

/// Character of Ind_{S_r x S_{n-r}}^{S_n} (f (x) g) by the explicit
/// induced-character formula.
ClassFunction induce_product(const ClassFunction& f, const ClassFunction& g);

/// (1/n!) sum_mu |class mu| f(mu) g(mu)
QRat inner(const ClassFunction& f, const ClassFunction& g);

/// Graded multiplicity of L_mu in L_lambda (x) C[X_1..X_n], by the Molien
/// series average.
QRat molien_mult(const Partition& lambda, const Partition& mu);

/// Classical Frobenius characteristic: sum_lambda <f, chi^lambda> s_lambda.
SymFunc frobenius0(const ClassFunction& f);

/// sum_mu gc.mult(mu) chi^mu, i.e. the graded character as a class function.
ClassFunction to_class_function(const GradedCharacter& gc);

/// Multiplicities <f, chi^mu> of a class function.
GradedCharacter decompose(const ClassFunction& f);

/// Branching-rule restriction of a graded character from S_n to S_{n-1}.
GradedCharacter restrict_graded(const GradedCharacter& gc);

}  // namespace symq
