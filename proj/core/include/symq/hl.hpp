#pragma once

// Hall-Littlewood P and Q functions, big Schur functions, graded Kostka
// multiplicities and the twisted Frobenius characteristic.
//
// Conventions: Q_lambda = b_lambda(q) P_lambda, S_lambda = s_lambda[(1-q)X],
// and the Hall form of symfunc.hpp, so <P_lambda, Q_mu> = <S_lambda, s_mu> =
// delta. The Kostka table holds [K_lambda : L_mu]_q, the coefficients of
// Q_lambda = sum_mu [K_lambda : L_mu]_q S_mu.

#include <map>
#include <vector>

#include "symq/linalg.hpp"
#include "symq/symfunc.hpp"

namespace symq {

/// Largest degree handled by the Hall-Littlewood layer.
inline constexpr int kMaxHlDegree = 8;

/// Raised when two routes that must agree do not, or a solve that must
/// succeed fails. Never expected in a correct build.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// P_lambda in the Schur basis, by symmetrization in |lambda| variables.
SymFunc hl_P(const Partition& lambda);
/// Q_lambda = b_lambda(q) P_lambda, Schur basis.
SymFunc hl_Q(const Partition& lambda);
/// S_lambda = s_lambda[(1-q)X], Schur basis.
SymFunc big_S(const Partition& lambda);

/// Change of basis among all eight bases.
SymFunc to_basis(const SymFunc& f, Basis target);

/// Expand both legs of a tensor in the given (possibly Hall-Littlewood) bases.
TensorSymFunc to_basis(const TensorSymFunc& t, Basis left, Basis right);

/// Per-degree matrices between the Hall-Littlewood bases and s; rows and
/// columns in partitions_of(n) order.
struct HlTransition {
  int n = 0;
  std::vector<Partition> labels;
  Matrix<QRat> P_to_s, Q_to_s, S_to_s;
  Matrix<QRat> s_to_P, s_to_Q, s_to_S;
};

/// Cached; safe to call concurrently.
const HlTransition& hl_transition(int n);

class KostkaTable {
 public:
  KostkaTable() = default;
  KostkaTable(int n, std::vector<Partition> labels, std::vector<std::vector<QPoly>> entries);

  int n() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  const std::vector<std::vector<QPoly>>& entries() const { return entries_; }
  /// [K_lambda : L_mu]_q
  const QPoly& at(const Partition& lambda, const Partition& mu) const;

  friend bool operator==(const KostkaTable& a, const KostkaTable& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index_of(const Partition& lambda) const;

  int n_ = 0;
  std::vector<Partition> labels_;
  std::vector<std::vector<QPoly>> entries_;
};

/// Expand each Q_lambda in the big Schur basis by solving the linear system
/// in Schur coordinates.
KostkaTable kostka_triangular(int n);

/// The unitriangular C with C G C^T = diag(b_lambda), G the Gram matrix of
/// big Schur functions, via an LDL^T factorization along partitions_of(n).
KostkaTable kostka_orthogonality(int n);

/// Memoized kostka_triangular; safe to call concurrently.
const KostkaTable& kostka_table(int n);

/// Twisted Frobenius characteristic: sum_mu gc.mult(mu) S_mu (S basis).
SymFunc psi(const GradedCharacter& gc);
/// The graded character whose image under psi is f (f homogeneous).
GradedCharacter psi_inverse(const SymFunc& f);

/// Graded character of K_lambda: the lambda-row of the Kostka table.
GradedCharacter char_K(const Partition& lambda);
/// Graded character of R_lambda: q^{n(lambda)} times the bar of char_K.
GradedCharacter char_R(const Partition& lambda);

/// Skew Q_{lambda/nu}, p basis; zero when nu is not contained in lambda.
/// Throws std::invalid_argument when |nu| > |lambda|.
SymFunc skew_Q(const Partition& lambda, const Partition& nu);

/// Coefficients of e_1 P_lambda in the P basis.
std::map<Partition, QPoly> pieri_e1_P(const Partition& lambda);

}  // namespace symq
