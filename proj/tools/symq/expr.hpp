#pragma once

// Expression language for the command-line tool:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '·' | '/' | <juxtaposition>) unary)*
//   unary := '-' unary | atom
//   atom  := INT | 'q' ('^' ['-'] INT)? | BASIS '[' partition? ']' | '(' expr ')'
//
// BASIS is one of m e h s p P Q S; whitespace is insignificant. Division is
// only allowed by scalars (elements of Q(q)).

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "symq/symfunc_types.hpp"

namespace symq::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation failures: degree bound, division by a non-scalar.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { integer, q_power, element, add, sub, mul, div, neg };
  explicit Expr(Kind k) : kind(k) {}

  Kind kind;
  Integer value;  // integer
  int exponent = 0;  // q_power
  Basis basis = Basis::p;  // element
  Partition partition;  // element
  ExprPtr lhs, rhs;  // binary ops; neg uses lhs
};

ExprPtr parse(std::string_view input);

/// Largest basis-element degree and product degree accepted by eval.
struct EvalLimits {
  int max_degree = 7;
};

/// Exact value, power-sum basis.
SymFunc eval(const Expr& e, const EvalLimits& limits = {});

/// Canonical text of a coefficient: polynomials as "1+q+2q^2", rational
/// functions as "num / den".
std::string format_coeff(const QRat& c);

/// "P[2] + (1+q)·P[1,1]"; parse(format(f)) evaluates back to f.
std::string format(const SymFunc& f);

}  // namespace symq::cli
