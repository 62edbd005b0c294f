#include "expr.hpp"

#include <cctype>
#include <climits>

#include "symq/hl.hpp"
#include "symq/symfunc.hpp"

namespace symq::cli {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

bool is_basis_letter(char c) {
  switch (c) {
    case 'm': case 'e': case 'h': case 's': case 'p': case 'P': case 'Q': case 'S':
      return true;
    default:
      return false;
  }
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
  Expr e(kind);
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return make(std::move(e));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty expression");
    ExprPtr e = parse_expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept_dot() {
    skip_ws();
    if (text_.substr(pos_, kMiddleDot.size()) != kMiddleDot) return false;
    pos_ += kMiddleDot.size();
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected ") + what);
  }

  bool starts_atom() {
    skip_ws();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(' || is_basis_letter(c);
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (true) {
      if (accept('+')) {
        e = binary(Expr::Kind::add, e, parse_term());
      } else if (accept('-')) {
        e = binary(Expr::Kind::sub, e, parse_term());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_unary();
    while (true) {
      if (accept('*') || accept_dot()) {
        e = binary(Expr::Kind::mul, e, parse_unary());
      } else if (accept('/')) {
        e = binary(Expr::Kind::div, e, parse_unary());
      } else if (starts_atom()) {
        e = binary(Expr::Kind::mul, e, parse_atom());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_unary() {
    if (accept('-')) {
      Expr e(Expr::Kind::neg);
      e.lhs = parse_unary();
      return make(std::move(e));
    }
    return parse_atom();
  }

  Integer parse_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_small_int(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    const Integer v = parse_digits();
    if (v > INT_MAX) throw ParseError(start, std::string(what) + " too large");
    return static_cast<int>(v.get_si());
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e(Expr::Kind::integer);
      e.value = parse_digits();
      return make(std::move(e));
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect(')', "')'");
      return inner;
    }
    if (c == 'q') {
      ++pos_;
      Expr e(Expr::Kind::q_power);
      e.exponent = 1;
      if (accept('^')) {
        const bool negative = accept('-');
        const int k = parse_small_int("exponent");
        e.exponent = negative ? -k : k;
      }
      return make(std::move(e));
    }
    if (is_basis_letter(c)) {
      ++pos_;
      Expr e(Expr::Kind::element);
      e.basis = basis_from_name(std::string(1, c));
      expect('[', "'[' after basis name");
      e.partition = parse_partition();
      expect(']', "']'");
      return make(std::move(e));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(pos_, std::string("unknown basis '") + c + "' (expected one of m e h s p P Q S)");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Partition parse_partition() {
    std::vector<int> parts;
    skip_ws();
    if (peek() == ']') return Partition();
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      const int part = parse_small_int("part");
      if (part == 0) throw ParseError(start, "parts must be positive");
      if (!parts.empty() && part > parts.back()) {
        throw ParseError(start, "parts must be nonincreasing (" + std::to_string(parts.back()) + " then " +
                                    std::to_string(part) + ")");
      }
      parts.push_back(part);
      if (!accept(',')) break;
    }
    return Partition(std::move(parts));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int max_degree_of(const SymFunc& f) {
  int d = 0;
  for (const auto& [lambda, c] : f.terms()) d = std::max(d, lambda.size());
  return d;
}

bool is_scalar(const SymFunc& f) {
  for (const auto& [lambda, c] : f.terms()) {
    if (!lambda.empty()) return false;
  }
  return true;
}

bool single_term(const QRat& c) { return c.num().span() == 1; }

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(input).parse_all(); }

SymFunc eval(const Expr& e, const EvalLimits& limits) {
  switch (e.kind) {
    case Expr::Kind::integer:
      return SymFunc::constant(QRat(Rational(e.value)));
    case Expr::Kind::q_power:
      return SymFunc::constant(QRat(QPoly::q_power(e.exponent)));
    case Expr::Kind::element:
      if (e.partition.size() > limits.max_degree) {
        throw EvalError("degree bound exceeded: " + basis_name(e.basis) + "[" + e.partition.to_string() +
                        "] has degree " + std::to_string(e.partition.size()) + " > " + std::to_string(limits.max_degree));
      }
      return to_basis(SymFunc::basis_element(e.basis, e.partition), Basis::p);
    case Expr::Kind::add:
      return eval(*e.lhs, limits) + eval(*e.rhs, limits);
    case Expr::Kind::sub:
      return eval(*e.lhs, limits) - eval(*e.rhs, limits);
    case Expr::Kind::neg:
      return -eval(*e.lhs, limits);
    case Expr::Kind::mul: {
      const SymFunc a = eval(*e.lhs, limits);
      const SymFunc b = eval(*e.rhs, limits);
      const int d = max_degree_of(a) + max_degree_of(b);
      if (d > limits.max_degree) {
        throw EvalError("degree bound exceeded: product of degree " + std::to_string(d) + " > " +
                        std::to_string(limits.max_degree));
      }
      return product(a, b);
    }
    case Expr::Kind::div: {
      const SymFunc a = eval(*e.lhs, limits);
      const SymFunc b = eval(*e.rhs, limits);
      if (!is_scalar(b)) throw EvalError("division by a non-scalar symmetric function");
      const QRat d = b.coeff(Partition());
      if (d.is_zero()) throw EvalError("division by zero");
      return a * d.inverse();
    }
  }
  throw EvalError("bad expression node");
}

std::string format_coeff(const QRat& c) {
  if (c.is_polynomial()) return c.as_poly().to_string();
  std::string n = c.num().to_string();
  if (c.num().span() > 1) n = "(" + n + ")";
  std::string d = c.den().to_string();
  if (c.den().span() > 1) d = "(" + d + ")";
  return n + " / " + d;
}

std::string format(const SymFunc& f) {
  if (f.is_zero()) return "0";
  const std::string b = basis_name(f.basis());
  std::string out;
  for (const auto& [lambda, c] : f.terms()) {
    QRat shown = c;
    bool negative = false;
    if (single_term(c) && c.num().leading_coeff() < 0) {
      negative = true;
      shown = -c;
    }
    std::string coeff;
    const bool wrap = shown.is_polynomial() && !single_term(shown);
    if (lambda.empty()) {
      coeff = format_coeff(shown);
      if (wrap) coeff = "(" + coeff + ")";
    } else if (!shown.is_one()) {
      coeff = format_coeff(shown);
      if (wrap) coeff = "(" + coeff + ")";
      coeff += std::string(kMiddleDot);
    }
    const std::string element = lambda.empty() ? std::string() : b + "[" + lambda.to_string() + "]";
    if (out.empty()) {
      out = (negative ? "-" : "") + coeff + element;
    } else {
      out += (negative ? " - " : " + ") + coeff + element;
    }
  }
  return out;
}

}  // namespace symq::cli
