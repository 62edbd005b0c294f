#pragma once

// Brute-force Garsia-Procesi modules R_lambda = Q[X_1..X_n] / I_lambda by
// exact linear algebra in each degree, independent of every
// symmetric-function routine.

#include <map>
#include <string>
#include <vector>

#include "symq/partition.hpp"
#include "symq/qcoeff.hpp"
#include "symq/symfunc_types.hpp"

namespace symq {

inline constexpr int kMaxOracleN = 6;

/// Generator e_t({X_i : i in subset}) of the Tanisaki ideal; variables are
/// 0-based.
struct TanisakiGenerator {
  std::vector<int> subset;
  int t = 0;

  friend bool operator==(const TanisakiGenerator&, const TanisakiGenerator&) = default;
};

/// Generators under the tail-sum convention: for |subset| = k, every t with
/// k >= t > k - (lambda'_{n-k+1} + ... + lambda'_n), lambda' padded to
/// length n, t >= 1.
std::vector<TanisakiGenerator> tanisaki_generators(const Partition& lambda);

/// The bound r >= t >= r - (lambda'_1 + ... + lambda'_r) read literally.
/// Kept to document that it produces the wrong quotient (e.g. dimension 1
/// for lambda = (1,1)); not used by the oracle.
std::vector<TanisakiGenerator> tanisaki_generators_literal(const Partition& lambda);

/// Exponent vectors of total degree d in n variables, lexicographically
/// decreasing (x_1^d first).
class MonomialSpace {
 public:
  MonomialSpace(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<int>& monomial(std::size_t i) const { return monomials_[i]; }
  /// Throws std::out_of_range for a vector not of this degree.
  std::size_t index_of(const std::vector<int>& exponents) const;

 private:
  int n_;
  int degree_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

struct GradedQuotient {
  Partition lambda;
  /// dims[d] for d = 0 .. n(lambda)+1 (the last entry must be zero).
  std::vector<long> dims;
  /// Trace of each cycle type on the degree-d piece of the quotient.
  std::vector<std::map<Partition, Rational>> traces;

  /// True when the piece of degree n(lambda)+1 vanishes.
  bool truncated() const { return !dims.empty() && dims.back() == 0; }
};

/// Builds the quotient in degrees 0 .. n(lambda)+1. Throws std::out_of_range
/// when |lambda| > kMaxOracleN.
GradedQuotient build_quotient(const Partition& lambda,
                              const std::vector<TanisakiGenerator>& generators);
GradedQuotient build_quotient(const Partition& lambda);

/// sum_d dim (R_lambda)_d q^d. This and graded_character throw
/// std::logic_error when the quotient does not vanish in degree n(lambda)+1.
QPoly graded_dimension(const Partition& lambda);
QPoly graded_dimension(const GradedQuotient& quotient);

/// mu -> sum_d q^d <trace profile at degree d, chi^mu>
GradedCharacter graded_character(const Partition& lambda);
GradedCharacter graded_character(const GradedQuotient& quotient);

/// One oracle run with its inline structural checks.
struct GpReport {
  Partition lambda;
  QPoly gdim;
  GradedCharacter character;
  bool truncation = false;  // nothing in degree n(lambda)+1
  bool rsoc = false;        // lambda-entry is q^{n(lambda)}
  bool ind_triv = false;    // q = 1 gives Ind_{S_lambda}^{S_n} triv
  bool pass() const { return truncation && rsoc && ind_triv; }
};

GpReport gp_report(const Partition& lambda);

struct OracleMismatch {
  Partition lambda;
  Partition mu;
  int degree = 0;
  Rational got;       // oracle
  Rational expected;  // symbolic char_R
};

struct OracleReport {
  int n = 0;
  int partitions_checked = 0;
  std::vector<OracleMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Compares graded_character(lambda) with the symbolic char_R(lambda) for
/// every lambda of n.
OracleReport oracle_vs_symbolic(int n);

}  // namespace symq
