#pragma once

// The ring Lambda_q in the classical bases m, e, h, s, p. Everything is
// routed through the power-sum basis, where product, coproduct, antipode,
// the q-deformed Hall form and the (1-q) plethysm are all diagonal or
// combinatorial.

#include <vector>

#include "symq/symfunc_types.hpp"

namespace symq {

/// Largest homogeneous degree for which transition matrices are built.
inline constexpr int kMaxSymDegree = 12;

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Transition data between one classical basis and p in a fixed degree.
/// Rows/columns are indexed by partitions_of(n) order.
struct ClassicalTransition {
  int n = 0;
  std::vector<Partition> labels;
  RationalMatrix to_p;    // B_lambda = sum_rho to_p[lambda][rho] p_rho
  RationalMatrix from_p;  // p_rho = sum_lambda from_p[rho][lambda] B_lambda
};

/// Cached per (basis, degree); safe to call concurrently.
const ClassicalTransition& classical_transition(Basis b, int n);

/// Re-expand f (in m/e/h/s/p) in target (m/e/h/s/p). Throws
/// std::invalid_argument for the Hall-Littlewood tags, which live in hl.
SymFunc convert(const SymFunc& f, Basis target);

/// Exact product; returned in f's basis when both operands share a classical
/// basis, otherwise in p.
SymFunc product(const SymFunc& f, const SymFunc& g);

/// Hopf coproduct, returned with both legs in f's basis.
TensorSymFunc coproduct(const SymFunc& f);

/// Antipode, p_r -> -p_r; returned in f's basis.
SymFunc antipode(const SymFunc& f);

/// The q-deformed Hall form: <p_lambda, p_mu> = delta z_lambda / prod (1 - q^{lambda_i}).
QRat hall_inner(const SymFunc& f, const SymFunc& g);

/// The classical form <p_lambda, p_mu> = delta z_lambda (the q = 0 Hall form).
QRat classical_inner(const SymFunc& f, const SymFunc& g);

/// Ring endomorphism p_r -> (1 - q^r) p_r; returned in f's basis.
SymFunc plethysm_one_minus_q(const SymFunc& f);

/// Convert both tensor legs.
TensorSymFunc convert(const TensorSymFunc& t, Basis left, Basis right);

/// Componentwise product (a (x) b)(c (x) d) = ac (x) bd, in the p (x) p basis.
TensorSymFunc tensor_product(const TensorSymFunc& a, const TensorSymFunc& b);

/// Substitute a rational value for q in every coefficient.
SymFunc specialize_q(const SymFunc& f, const Rational& q);

/// Uniform lookup of [M : L_mu]_q; zero when absent.
QRat inner_graded(const GradedCharacter& gc, const Partition& mu);

/// p-basis coordinates of f (any classical basis).
SymFunc to_power_sums(const SymFunc& f);

}  // namespace symq
