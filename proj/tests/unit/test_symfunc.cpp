#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symq/symfunc.hpp"

using namespace symq;

namespace {

const QPoly q = QPoly::q_power(1);
const QPoly one(1);
const Basis kClassical[] = {Basis::m, Basis::e, Basis::h, Basis::s, Basis::p};

SymFunc el(Basis b, const Partition& lambda) { return SymFunc::basis_element(b, lambda); }

oracle::Poly direct(Basis b, const Partition& lambda, int k) {
  switch (b) {
    case Basis::m: return oracle::monomial_sym(lambda, k);
    case Basis::e: return oracle::elementary(lambda, k);
    case Basis::h: return oracle::complete(lambda, k);
    case Basis::s: return oracle::schur(lambda, k);
    case Basis::p: return oracle::power_sum(lambda, k);
    default: throw std::logic_error("not classical");
  }
}

// Evaluate a symmetric function in k variables from its p-expansion.
oracle::Poly in_variables(const SymFunc& f, int k) {
  oracle::Poly out;
  for (const auto& [rho, c] : to_power_sums(f).terms()) {
    for (const auto& [e, d] : oracle::power_sum(rho, k)) oracle::add_to(out, e, c * d);
  }
  return out;
}

// Evaluate a tensor in 2k variables: left leg in the first k, right in the rest.
oracle::Poly in_split_variables(const TensorSymFunc& t, int k) {
  oracle::Poly out;
  for (const auto& [key, c] : t.terms()) {
    oracle::Poly left = in_variables(SymFunc::basis_element(t.bases().first, key.first), k);
    oracle::Poly right = in_variables(SymFunc::basis_element(t.bases().second, key.second), k);
    for (const auto& [ea, ca] : left) {
      for (const auto& [eb, cb] : right) {
        std::vector<int> e = ea;
        e.insert(e.end(), eb.begin(), eb.end());
        oracle::add_to(out, e, c * ca * cb);
      }
    }
  }
  return out;
}

QRat z_over(const Partition& rho) {
  QPoly den(1);
  for (int r : rho.parts()) den *= one - QPoly::q_power(r);
  return QRat(QPoly(Rational(Integer(std::to_string(z_stat(rho))))), den);
}

}  // namespace

TEST(Basis, Names) {
  EXPECT_EQ(basis_name(Basis::P), "P");
  EXPECT_EQ(basis_from_name("S"), Basis::S);
  EXPECT_THROW(basis_from_name("x"), std::invalid_argument);
  EXPECT_TRUE(is_classical(Basis::s));
  EXPECT_FALSE(is_classical(Basis::Q));
}

TEST(SymFuncValue, Arithmetic) {
  SymFunc f = el(Basis::s, Partition{2}) + el(Basis::s, Partition{1, 1}) * QRat(q);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.coeff(Partition{1, 1}), QRat(q));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_THROW(f + el(Basis::p, Partition{2}), std::invalid_argument);
  const SymFunc mixed = f + SymFunc::constant(QRat(1), Basis::s);
  EXPECT_FALSE(mixed.degree().has_value());
  EXPECT_FALSE(mixed.is_homogeneous());
  GradedCharacter gc;
  gc.n = 2;
  EXPECT_THROW(gc.at(Partition{3}), std::invalid_argument);
  EXPECT_EQ(inner_graded(gc, Partition{2}), QRat(0));
}

TEST(Convert, Examples) {
  EXPECT_EQ(convert(el(Basis::h, Partition{2}), Basis::s), el(Basis::s, Partition{2}));
  EXPECT_EQ(convert(el(Basis::e, Partition{2}), Basis::s), el(Basis::s, Partition{1, 1}));
  SymFunc p11(Basis::s);
  p11.add_term(Partition{2}, QRat(1));
  p11.add_term(Partition{1, 1}, QRat(1));
  EXPECT_EQ(convert(el(Basis::p, Partition{1, 1}), Basis::s), p11);
  SymFunc p2(Basis::s);
  p2.add_term(Partition{2}, QRat(1));
  p2.add_term(Partition{1, 1}, QRat(-1));
  EXPECT_EQ(convert(el(Basis::p, Partition{2}), Basis::s), p2);
  SymFunc h2m(Basis::m);
  h2m.add_term(Partition{2}, QRat(1));
  h2m.add_term(Partition{1, 1}, QRat(1));
  EXPECT_EQ(convert(el(Basis::h, Partition{2}), Basis::m), h2m);
  EXPECT_THROW(convert(el(Basis::P, Partition{1}), Basis::s), std::invalid_argument);
  EXPECT_THROW(convert(el(Basis::s, Partition{1}), Basis::Q), std::invalid_argument);
  EXPECT_THROW(classical_transition(Basis::s, kMaxSymDegree + 1), std::out_of_range);
}

TEST(ConvertProperty, AgreesWithPolynomialsInFinitelyManyVariables) {
  for (int n = 0; n <= 5; ++n) {
    for (Basis b : kClassical) {
      for (const auto& lambda : partitions_of(n)) {
        EXPECT_EQ(in_variables(el(b, lambda), n), direct(b, lambda, n)) << basis_name(b) << lambda.to_string();
      }
    }
  }
}

TEST(ConvertProperty, RoundTripsAreIdentity) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.between(0, 7);
    const Basis from = kClassical[gen.between(0, 4)];
    const Basis via = kClassical[gen.between(0, 4)];
    SymFunc f(from);
    for (int t = 0; t < 3; ++t) f.add_term(gen.partition(n), gen.rat());
    EXPECT_EQ(convert(convert(f, via), from), f);
  }
}

TEST(ConvertProperty, TransitionMatricesAreInverse) {
  for (int n = 0; n <= 8; ++n) {
    for (Basis b : kClassical) {
      const auto& t = classical_transition(b, n);
      const std::size_t size = t.labels.size();
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          Rational acc(0);
          for (std::size_t k = 0; k < size; ++k) acc += t.to_p[i][k] * t.from_p[k][j];
          EXPECT_EQ(acc, Rational(i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST(Product, Examples) {
  SymFunc expected(Basis::s);
  expected.add_term(Partition{2}, QRat(1));
  expected.add_term(Partition{1, 1}, QRat(1));
  EXPECT_EQ(product(el(Basis::s, Partition{1}), el(Basis::s, Partition{1})), expected);
  EXPECT_EQ(product(el(Basis::p, Partition{2}), el(Basis::p, Partition{1})), el(Basis::p, Partition{2, 1}));
  EXPECT_EQ(product(el(Basis::s, Partition{1}), el(Basis::p, Partition{1})).basis(), Basis::p);
  EXPECT_EQ(product(el(Basis::e, Partition{2}), el(Basis::e, Partition{1})), el(Basis::e, Partition{2, 1}));
}

TEST(ProductProperty, AgreesWithPolynomialMultiplication) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 5; ++b) {
      const int k = a + b;
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          for (Basis basis : {Basis::s, Basis::m}) {
            const SymFunc f = product(el(basis, lambda), el(basis, mu));
            EXPECT_EQ(f.basis(), basis);
            EXPECT_EQ(in_variables(f, k), oracle::poly_mul(direct(basis, lambda, k), direct(basis, mu, k)));
          }
        }
      }
    }
  }
}

TEST(Coproduct, Examples) {
  const TensorSymFunc t = coproduct(el(Basis::p, Partition{2}));
  EXPECT_EQ(t.terms().size(), 2u);
  EXPECT_EQ(t.coeff(Partition{2}, Partition()), QRat(1));
  EXPECT_EQ(t.coeff(Partition(), Partition{2}), QRat(1));
  const TensorSymFunc h = coproduct(el(Basis::h, Partition{2}));
  EXPECT_EQ(h.bases(), std::make_pair(Basis::h, Basis::h));
  EXPECT_EQ(h.coeff(Partition{2}, Partition()), QRat(1));
  EXPECT_EQ(h.coeff(Partition{1}, Partition{1}), QRat(1));
  EXPECT_EQ(h.coeff(Partition(), Partition{2}), QRat(1));
}

TEST(CoproductProperty, IsEvaluationInTwoAlphabets) {
  for (int n = 0; n <= 3; ++n) {
    for (Basis b : {Basis::s, Basis::m, Basis::e}) {
      for (const auto& lambda : partitions_of(n)) {
        EXPECT_EQ(in_split_variables(coproduct(el(b, lambda)), n), direct(b, lambda, 2 * n)) << lambda.to_string();
      }
    }
  }
}

TEST(Antipode, Examples) {
  const SymFunc a = antipode(el(Basis::h, Partition{3}));
  EXPECT_EQ(convert(a, Basis::e), el(Basis::e, Partition{3}) * QRat(-1));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(antipode(el(Basis::s, lambda)), el(Basis::s, conjugate(lambda)) * QRat(n % 2 ? -1 : 1));
    }
  }
}

TEST(HallForm, Examples) {
  EXPECT_EQ(hall_inner(el(Basis::p, Partition{1}), el(Basis::p, Partition{1})), QRat(one, one - q));
  EXPECT_EQ(hall_inner(el(Basis::p, Partition{2}), el(Basis::p, Partition{1, 1})), QRat(0));
  EXPECT_EQ(hall_inner(el(Basis::p, Partition{1, 1}), el(Basis::p, Partition{1, 1})), QRat(QPoly(Rational(2)), (one - q) * (one - q)));
  EXPECT_EQ(hall_inner(SymFunc::constant(QRat(3)), SymFunc::constant(QRat(q))), QRat(Rational(3) * q));
  // h_1 against itself and the q-binomial denominators of degree two
  EXPECT_EQ(hall_inner(el(Basis::h, Partition{2}), el(Basis::h, Partition{2})),
            QRat(one, (one - q) * (one - q * q)));
}

TEST(HallFormProperty, DiagonalOnPowerSumsAndSymmetric) {
  oracle::Gen gen(31);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        EXPECT_EQ(hall_inner(el(Basis::p, a), el(Basis::p, b)), a == b ? z_over(a) : QRat(0));
      }
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.between(1, 5);
    SymFunc f(kClassical[gen.between(0, 4)]), g(kClassical[gen.between(0, 4)]);
    f.add_term(gen.partition(n), gen.rat());
    f.add_term(gen.partition(n), gen.rat());
    g.add_term(gen.partition(n), gen.rat());
    EXPECT_EQ(hall_inner(f, g), hall_inner(g, f));
    EXPECT_EQ(hall_inner(f, g), hall_inner(to_power_sums(f), g));
  }
}

TEST(ClassicalForm, SchurOrthonormalAndHmDual) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        const QRat delta(a == b ? 1 : 0);
        EXPECT_EQ(classical_inner(el(Basis::s, a), el(Basis::s, b)), delta);
        EXPECT_EQ(classical_inner(el(Basis::h, a), el(Basis::m, b)), delta);
      }
    }
  }
}

TEST(Plethysm, OneMinusQ) {
  SymFunc expected(Basis::p);
  expected.add_term(Partition{2, 1}, QRat((one - q * q) * (one - q)));
  EXPECT_EQ(plethysm_one_minus_q(el(Basis::p, Partition{2, 1})), expected);
  const SymFunc s1 = plethysm_one_minus_q(el(Basis::s, Partition{1}));
  EXPECT_EQ(s1, el(Basis::s, Partition{1}) * QRat(one - q));
  // s_lambda[(1-q)X] pairs with s_mu to delta under the Hall form
  for (int n = 0; n <= 5; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        EXPECT_EQ(hall_inner(plethysm_one_minus_q(el(Basis::s, a)), el(Basis::s, b)), QRat(a == b ? 1 : 0));
      }
    }
  }
}

TEST(Specialize, AtRationalPoints) {
  SymFunc f(Basis::s);
  f.add_term(Partition{2}, QRat(one + q));
  f.add_term(Partition{1, 1}, QRat(q, one - q));
  const SymFunc at = specialize_q(f, Rational(2));
  EXPECT_EQ(at.coeff(Partition{2}), QRat(3));
  EXPECT_EQ(at.coeff(Partition{1, 1}), QRat(-2));
  EXPECT_THROW(specialize_q(f, Rational(1)), DivisionByZero);
  // the Hall form at q = 0 is the classical form
  for (const auto& a : partitions_of(4)) {
    for (const auto& b : partitions_of(4)) {
      const QRat h = hall_inner(el(Basis::h, a), el(Basis::s, b));
      EXPECT_EQ(QRat(h.evaluate(Rational(0))), classical_inner(el(Basis::h, a), el(Basis::s, b)));
    }
  }
}

TEST(Tensor, ConvertAndMultiply) {
  const TensorSymFunc t = coproduct(el(Basis::s, Partition{1}));
  const TensorSymFunc in_p = convert(t, Basis::p, Basis::p);
  EXPECT_EQ(in_p.coeff(Partition{1}, Partition()), QRat(1));
  const TensorSymFunc sq = tensor_product(in_p, in_p);
  EXPECT_EQ(sq.coeff(Partition{1}, Partition{1}), QRat(2));
  EXPECT_EQ(sq.coeff(Partition{1, 1}, Partition()), QRat(1));
  EXPECT_EQ(sq, convert(coproduct(el(Basis::p, Partition{1, 1})), Basis::p, Basis::p));
}
