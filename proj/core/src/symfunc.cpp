#include "symq/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include "symq/linalg.hpp"
#include "symq/sncharacter.hpp"

namespace symq {

// ------------------------------------------------------------ value types

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::p: return "p";
    case Basis::P: return "P";
    case Basis::Q: return "Q";
    case Basis::S: return "S";
  }
  return "?";
}

Basis basis_from_name(const std::string& name) {
  static const std::map<std::string, Basis> names = {
      {"m", Basis::m}, {"e", Basis::e}, {"h", Basis::h}, {"s", Basis::s},
      {"p", Basis::p}, {"P", Basis::P}, {"Q", Basis::Q}, {"S", Basis::S}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown basis '" + name + "'");
  return it->second;
}

bool is_classical(Basis b) {
  return b == Basis::m || b == Basis::e || b == Basis::h || b == Basis::s || b == Basis::p;
}

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [lambda, c] : terms) {
    if (!c.is_zero()) terms_.emplace(lambda, std::move(c));
  }
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda, const QRat& c) {
  SymFunc f(basis);
  f.add_term(lambda, c);
  return f;
}

SymFunc SymFunc::constant(const QRat& c, Basis basis) { return basis_element(basis, Partition(), c); }

QRat SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QRat() : it->second;
}

std::optional<int> SymFunc::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  // Keys are ordered by size first, so the last key has the largest size.
  if (terms_.rbegin()->first.size() != d) return std::nullopt;
  return d;
}

void SymFunc::add_term(const Partition& lambda, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymFunc::check_same_basis(const SymFunc& rhs) const {
  if (basis_ != rhs.basis_ && !rhs.is_zero() && !is_zero()) {
    throw std::invalid_argument("cannot combine elements in bases " + basis_name(basis_) + " and " +
                                basis_name(rhs.basis_) + " without conversion");
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& rhs) {
  check_same_basis(rhs);
  if (is_zero()) basis_ = rhs.basis_;
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& rhs) { return *this += -rhs; }

SymFunc& SymFunc::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, v] : terms_) v *= c;
  return *this;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lambda, v] : r.terms_) v = -v;
  return r;
}

namespace {

bool is_single_term(const QRat& c) { return c.is_polynomial() && c.num().span() == 1; }

// Appends "coefficient * element" with the sign folded into the separator.
void append_term(std::string& out, const QRat& c, const std::string& element, const std::string& mul) {
  std::string coeff;
  bool negative = false;
  QRat shown = c;
  if (is_single_term(c) && c.num().leading_coeff() < 0) {
    negative = true;
    shown = -c;
  }
  if (element.empty()) {
    coeff = shown.to_string();
    if (!is_single_term(shown) && shown.is_polynomial()) coeff = "(" + coeff + ")";
  } else if (!shown.is_one()) {
    coeff = shown.to_string();
    if (shown.is_polynomial() && !is_single_term(shown)) coeff = "(" + coeff + ")";
    coeff += mul;
  }
  if (out.empty()) {
    out = (negative ? "-" : "") + coeff + element;
  } else {
    out += (negative ? " - " : " + ") + coeff + element;
  }
}

}  // namespace

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const std::string b = basis_name(basis_);
  for (const auto& [lambda, c] : terms_) {
    append_term(out, c, lambda.empty() ? std::string() : b + "[" + lambda.to_string() + "]", "*");
  }
  return out;
}

QRat TensorSymFunc::coeff(const Partition& a, const Partition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? QRat() : it->second;
}

void TensorSymFunc::add_term(const Partition& a, const Partition& b, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string TensorSymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const std::string l = basis_name(bases_.first);
  const std::string r = basis_name(bases_.second);
  for (const auto& [key, c] : terms_) {
    const std::string left = key.first.empty() ? "1" : l + "[" + key.first.to_string() + "]";
    const std::string right = key.second.empty() ? "1" : r + "[" + key.second.to_string() + "]";
    append_term(out, c, left + "(x)" + right, "*");
  }
  return out;
}

QRat GradedCharacter::at(const Partition& mu) const {
  if (mu.size() != n) {
    throw std::invalid_argument("graded character of S_" + std::to_string(n) + " queried at " + mu.to_string());
  }
  auto it = mult.find(mu);
  return it == mult.end() ? QRat() : it->second;
}

void GradedCharacter::set(const Partition& mu, const QRat& value) {
  if (mu.size() != n) {
    throw std::invalid_argument("graded character of S_" + std::to_string(n) + " set at " + mu.to_string());
  }
  if (value.is_zero()) {
    mult.erase(mu);
  } else {
    mult[mu] = value;
  }
}

QRat inner_graded(const GradedCharacter& gc, const Partition& mu) { return gc.at(mu); }

// ------------------------------------------------------------ transitions

namespace {

using PowerSum = std::map<Partition, Rational>;

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

PowerSum multiply(const PowerSum& a, const PowerSum& b) {
  PowerSum out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      auto& slot = out[merge(x, y)];
      slot += cx * cy;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational z_rational(const Partition& lambda) { return Rational(static_cast<unsigned long>(z_stat(lambda))); }

// Newton identities: k h_k = sum_i p_i h_{k-i}, k e_k = sum_i (-1)^{i-1} p_i e_{k-i}.
std::vector<PowerSum> one_row_power_sums(int n, bool elementary) {
  std::vector<PowerSum> out(static_cast<std::size_t>(n + 1));
  out[0][Partition()] = 1;
  for (int k = 1; k <= n; ++k) {
    PowerSum acc;
    for (int i = 1; i <= k; ++i) {
      const PowerSum pi = {{Partition({i}), Rational(elementary && (i % 2 == 0) ? -1 : 1)}};
      for (const auto& [lam, c] : multiply(pi, out[static_cast<std::size_t>(k - i)])) acc[lam] += c;
    }
    for (auto& [lam, c] : acc) c /= k;
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return out;
}

RationalMatrix product_basis_to_p(int n, bool elementary, const std::vector<Partition>& labels,
                                  const std::map<Partition, std::size_t>& index) {
  const auto rows = one_row_power_sums(n, elementary);
  RationalMatrix m(labels.size(), std::vector<Rational>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    PowerSum acc = {{Partition(), Rational(1)}};
    for (int part : labels[i].parts()) acc = multiply(acc, rows[static_cast<std::size_t>(part)]);
    for (const auto& [rho, c] : acc) m[i][index.at(rho)] = c;
  }
  return m;
}

std::unique_ptr<ClassicalTransition> build_transition(Basis b, int n) {
  auto t = std::make_unique<ClassicalTransition>();
  t->n = n;
  t->labels = partitions_of(n);
  const auto& labels = t->labels;
  const std::size_t k = labels.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(labels[i], i);
  RationalMatrix identity(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;

  switch (b) {
    case Basis::p:
      t->to_p = identity;
      t->from_p = identity;
      break;
    case Basis::s: {
      // p_rho = sum_lambda chi^lambda(rho) s_lambda, s_lambda = sum_rho chi^lambda(rho)/z_rho p_rho.
      const auto& table = char_table(n);
      t->to_p.assign(k, std::vector<Rational>(k));
      t->from_p.assign(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const Rational chi(static_cast<long>(table.value(i, j)));
          t->to_p[i][j] = chi / z_rational(labels[j]);
          t->from_p[j][i] = chi;
        }
      }
      break;
    }
    case Basis::h:
    case Basis::e:
      t->to_p = product_basis_to_p(n, b == Basis::e, labels, index);
      t->from_p = invert(t->to_p);
      break;
    case Basis::m: {
      // <h_lambda, m_mu> = delta under <p_rho, p_sigma> = delta z_rho, hence
      // p_rho = sum_lambda z_rho <coefficient of p_rho in h_lambda> m_lambda.
      const auto& h = classical_transition(Basis::h, n);
      t->from_p.assign(k, std::vector<Rational>(k));
      for (std::size_t lam = 0; lam < k; ++lam) {
        for (std::size_t rho = 0; rho < k; ++rho) t->from_p[rho][lam] = z_rational(labels[rho]) * h.to_p[lam][rho];
      }
      t->to_p = invert(t->from_p);
      break;
    }
    default:
      throw std::invalid_argument("no classical transition for basis " + basis_name(b));
  }
  return t;
}

struct TransitionCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<ClassicalTransition>> entries;
};

TransitionCache& transition_cache() {
  static TransitionCache cache;
  return cache;
}

void require_classical(Basis b, const char* what) {
  if (!is_classical(b)) {
    throw std::invalid_argument(std::string(what) + ": basis " + basis_name(b) +
                                " requires the Hall-Littlewood layer");
  }
}

void require_degree(int n) {
  if (n > kMaxSymDegree) {
    throw std::out_of_range("degree " + std::to_string(n) + " exceeds the supported bound " +
                            std::to_string(kMaxSymDegree));
  }
}

using PTerms = std::map<Partition, QRat>;

PTerms p_terms(const SymFunc& f) {
  require_classical(f.basis(), "p_terms");
  if (f.basis() == Basis::p) return f.terms();
  PTerms out;
  for (const auto& [lambda, c] : f.terms()) {
    require_degree(lambda.size());
    const auto& t = classical_transition(f.basis(), lambda.size());
    const auto& row = t.to_p[std::distance(t.labels.begin(), std::lower_bound(t.labels.begin(), t.labels.end(), lambda))];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      auto& slot = out[t.labels[j]];
      slot += c * row[j];
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

SymFunc from_p_terms(const PTerms& pt, Basis target) {
  require_classical(target, "convert");
  if (target == Basis::p) return SymFunc(Basis::p, pt);
  SymFunc::Terms out;
  for (const auto& [rho, c] : pt) {
    require_degree(rho.size());
    const auto& t = classical_transition(target, rho.size());
    const auto& row = t.from_p[std::distance(t.labels.begin(), std::lower_bound(t.labels.begin(), t.labels.end(), rho))];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      auto& slot = out[t.labels[j]];
      slot += c * row[j];
    }
  }
  return SymFunc(target, std::move(out));
}

// Sub-multisets alpha of lambda with complement beta and multiplicity
// prod_i C(m_i, k_i).
void for_each_split(const Partition& lambda,
                    const std::function<void(const Partition&, const Partition&, const Rational&)>& fn) {
  std::vector<std::pair<int, int>> groups;
  for (int x : lambda.parts()) {
    if (groups.empty() || groups.back().first != x) groups.emplace_back(x, 0);
    groups.back().second++;
  }
  std::vector<int> take(groups.size(), 0);
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t g, Rational weight) {
    if (g == groups.size()) {
      std::vector<int> a, b;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        a.insert(a.end(), static_cast<std::size_t>(take[i]), groups[i].first);
        b.insert(b.end(), static_cast<std::size_t>(groups[i].second - take[i]), groups[i].first);
      }
      fn(Partition(std::move(a)), Partition(std::move(b)), weight);
      return;
    }
    const int m = groups[g].second;
    Integer binom = 1;
    for (int k = 0; k <= m; ++k) {
      take[g] = k;
      rec(g + 1, weight * Rational(binom));
      binom = binom * (m - k) / (k + 1);
    }
  };
  rec(0, Rational(1));
}

QPoly one_minus_q_product(const Partition& lambda) {
  QPoly out(1);
  for (int r : lambda.parts()) out *= QPoly(1) - QPoly::q_power(r);
  return out;
}

}  // namespace

const ClassicalTransition& classical_transition(Basis b, int n) {
  require_classical(b, "classical_transition");
  if (n < 0) throw std::invalid_argument("negative degree");
  require_degree(n);
  auto& cache = transition_cache();
  const auto key = std::make_pair(static_cast<int>(b), n);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return *it->second;
  }
  auto built = build_transition(b, n);
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.entries.try_emplace(key, std::move(built));
  return *it->second;
}

SymFunc to_power_sums(const SymFunc& f) { return SymFunc(Basis::p, p_terms(f)); }

SymFunc convert(const SymFunc& f, Basis target) {
  require_classical(f.basis(), "convert");
  require_classical(target, "convert");
  if (f.basis() == target) return f;
  return from_p_terms(p_terms(f), target);
}

SymFunc product(const SymFunc& f, const SymFunc& g) {
  const PTerms a = p_terms(f);
  const PTerms b = p_terms(g);
  PTerms out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      auto& slot = out[merge(x, y)];
      slot += cx * cy;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  const Basis target = (f.basis() == g.basis()) ? f.basis() : Basis::p;
  return from_p_terms(out, target);
}

TensorSymFunc coproduct(const SymFunc& f) {
  TensorSymFunc out(Basis::p, Basis::p);
  for (const auto& [lambda, c] : p_terms(f)) {
    for_each_split(lambda, [&](const Partition& a, const Partition& b, const Rational& w) { out.add_term(a, b, c * w); });
  }
  if (f.basis() == Basis::p) return out;
  return convert(out, f.basis(), f.basis());
}

SymFunc antipode(const SymFunc& f) {
  PTerms pt = p_terms(f);
  for (auto& [lambda, c] : pt) {
    if (lambda.length() % 2) c = -c;
  }
  return from_p_terms(pt, f.basis());
}

QRat hall_inner(const SymFunc& f, const SymFunc& g) {
  const PTerms a = p_terms(f);
  const PTerms b = p_terms(g);
  // Group by degree; within a degree every prod(1 - q^{rho_i}) divides
  // (q;q)_n, so polynomial coefficients sum over one common denominator.
  std::map<int, QPoly> poly_sums;
  QRat total;
  for (const auto& [rho, ca] : a) {
    auto it = b.find(rho);
    if (it == b.end()) continue;
    const QRat prod = ca * it->second * z_rational(rho);
    if (prod.is_polynomial()) {
      const int n = rho.size();
      poly_sums[n] += prod.as_poly() * q_pochhammer(n).exact_div(one_minus_q_product(rho));
    } else {
      total += prod / QRat(one_minus_q_product(rho));
    }
  }
  for (const auto& [n, num] : poly_sums) total += QRat(num, q_pochhammer(n));
  return total;
}

QRat classical_inner(const SymFunc& f, const SymFunc& g) {
  const PTerms a = p_terms(f);
  const PTerms b = p_terms(g);
  QRat total;
  for (const auto& [rho, ca] : a) {
    auto it = b.find(rho);
    if (it == b.end()) continue;
    total += ca * it->second * z_rational(rho);
  }
  return total;
}

SymFunc plethysm_one_minus_q(const SymFunc& f) {
  PTerms pt = p_terms(f);
  for (auto& [lambda, c] : pt) c *= QRat(one_minus_q_product(lambda));
  return from_p_terms(pt, f.basis());
}

TensorSymFunc convert(const TensorSymFunc& t, Basis left, Basis right) {
  require_classical(t.bases().first, "convert");
  require_classical(t.bases().second, "convert");
  std::map<Partition, SymFunc> left_cache, right_cache;
  auto image = [](std::map<Partition, SymFunc>& cache, Basis from, Basis to, const Partition& lambda) -> const SymFunc& {
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, convert(SymFunc::basis_element(from, lambda), to)).first;
    return it->second;
  };
  TensorSymFunc out(left, right);
  for (const auto& [key, c] : t.terms()) {
    const SymFunc& a = image(left_cache, t.bases().first, left, key.first);
    const SymFunc& b = image(right_cache, t.bases().second, right, key.second);
    for (const auto& [x, cx] : a.terms()) {
      for (const auto& [y, cy] : b.terms()) out.add_term(x, y, c * cx * cy);
    }
  }
  return out;
}

TensorSymFunc tensor_product(const TensorSymFunc& a, const TensorSymFunc& b) {
  const TensorSymFunc pa = convert(a, Basis::p, Basis::p);
  const TensorSymFunc pb = convert(b, Basis::p, Basis::p);
  TensorSymFunc out(Basis::p, Basis::p);
  for (const auto& [ka, ca] : pa.terms()) {
    for (const auto& [kb, cb] : pb.terms()) out.add_term(merge(ka.first, kb.first), merge(ka.second, kb.second), ca * cb);
  }
  return out;
}

SymFunc specialize_q(const SymFunc& f, const Rational& q) {
  SymFunc out(f.basis());
  for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, QRat(c.evaluate(q)));
  return out;
}

}  // namespace symq
