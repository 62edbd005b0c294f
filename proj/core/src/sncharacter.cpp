#include "symq/sncharacter.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <memory>
#include <mutex>
#include <set>

#include "symq/symfunc.hpp"

namespace symq {

namespace {

using MnMemo = std::map<std::pair<Partition, Partition>, long long>;

// chi^lambda(mu) by removing a rim hook of length mu_1 from the beta-set of
// lambda. The sign is (-1)^(number of beta numbers jumped over).
long long mn_value(const Partition& lambda, const Partition& mu, MnMemo& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu.part(1);
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  const Partition mu_rest(std::move(rest));

  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) beta[static_cast<std::size_t>(i - 1)] = lambda.part(i) + len - i;
  const std::set<int> beta_set(beta.begin(), beta.end());

  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || beta_set.count(target)) continue;
    int jumped = 0;
    for (int x : beta) jumped += (x > target && x < b);
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int k = 0; k < len; ++k) parts.push_back(nb[static_cast<std::size_t>(k)] - (len - 1 - k));
    const Partition smaller = Partition::from_unsorted(std::move(parts));
    const long long v = mn_value(smaller, mu_rest, memo);
    total += (jumped % 2 ? -v : v);
  }
  memo.emplace(key, total);
  return total;
}

struct TableCache {
  std::array<std::once_flag, kMaxCharTableN + 1> once;
  std::array<std::unique_ptr<CharTable>, kMaxCharTableN + 1> tables;
};

TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

void check_size(int a, int b, const char* what) {
  if (a != b) throw SizeMismatch(std::string(what) + ": size mismatch");
}

// All (alpha, beta) with alpha + beta = rho as multisets and |alpha| = r.
void split_cycle_type(const Partition& rho, int r,
                      std::vector<std::pair<Partition, Partition>>& out) {
  std::vector<std::pair<int, int>> groups;  // (part value, multiplicity)
  for (int x : rho.parts()) {
    if (groups.empty() || groups.back().first != x) groups.emplace_back(x, 0);
    groups.back().second++;
  }
  std::vector<int> take(groups.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t g, int size_left) {
    if (g == groups.size()) {
      if (size_left != 0) return;
      std::vector<int> a, b;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        a.insert(a.end(), static_cast<std::size_t>(take[k]), groups[k].first);
        b.insert(b.end(), static_cast<std::size_t>(groups[k].second - take[k]), groups[k].first);
      }
      out.emplace_back(Partition(std::move(a)), Partition(std::move(b)));
      return;
    }
    for (int t = 0; t <= groups[g].second && t * groups[g].first <= size_left; ++t) {
      take[g] = t;
      rec(g + 1, size_left - t * groups[g].first);
    }
  };
  rec(0, r);
}

}  // namespace

CharTable::CharTable(int n, std::vector<Partition> labels, std::vector<std::vector<long long>> values)
    : n_(n), labels_(std::move(labels)), values_(std::move(values)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::size_t CharTable::index_of(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) throw SizeMismatch("partition " + lambda.to_string() + " is not of size " + std::to_string(n_));
  return it->second;
}

long long CharTable::value(const Partition& irrep, const Partition& cycle_type) const {
  return values_[index_of(irrep)][index_of(cycle_type)];
}

long long CharTable::dimension(const Partition& irrep) const {
  return values_[index_of(irrep)].back();  // the last label is (1^n)
}

const CharTable& char_table(int n) {
  if (n < 0 || n > kMaxCharTableN) {
    throw std::out_of_range("char_table: n = " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxCharTableN) + "]");
  }
  auto& cache = table_cache();
  const auto idx = static_cast<std::size_t>(n);
  std::call_once(cache.once[idx], [&] {
    auto labels = partitions_of(n);
    MnMemo memo;
    std::vector<std::vector<long long>> values(labels.size(), std::vector<long long>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) values[i][j] = mn_value(labels[i], labels[j], memo);
    }
    cache.tables[idx] = std::make_unique<CharTable>(n, std::move(labels), std::move(values));
  });
  return *cache.tables[idx];
}

long long character_value(const Partition& lambda, const Partition& mu) {
  check_size(lambda.size(), mu.size(), "character_value");
  if (lambda.size() <= kMaxCharTableN) return char_table(lambda.size()).value(lambda, mu);
  MnMemo memo;
  return mn_value(lambda, mu, memo);
}

std::vector<Partition> restrict_irrep(const Partition& lambda) {
  std::vector<Partition> out;
  for (int j = 1; j <= lambda.length(); ++j) {
    // Removable corner: last row of a block of equal parts.
    if (j == lambda.length() || lambda.part(j) > lambda.part(j + 1)) out.push_back(remove_box(lambda, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------- ClassFunction

ClassFunction::ClassFunction(int n) : n_(n) {
  for (const auto& mu : partitions_of(n)) values_.emplace(mu, QRat());
}

const QRat& ClassFunction::at(const Partition& cycle_type) const {
  auto it = values_.find(cycle_type);
  if (it == values_.end()) throw SizeMismatch("class function of S_" + std::to_string(n_) + " has no class " + cycle_type.to_string());
  return it->second;
}

void ClassFunction::set(const Partition& cycle_type, const QRat& value) {
  auto it = values_.find(cycle_type);
  if (it == values_.end()) throw SizeMismatch("class function of S_" + std::to_string(n_) + " has no class " + cycle_type.to_string());
  it->second = value;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  check_size(n_, rhs.n_, "class function sum");
  for (auto& [mu, v] : values_) v += rhs.values_.at(mu);
  return *this;
}

ClassFunction& ClassFunction::operator*=(const QRat& c) {
  for (auto& [mu, v] : values_) v *= c;
  return *this;
}

ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b) {
  check_size(a.n_, b.n_, "pointwise product");
  ClassFunction out(a.n_);
  for (auto& [mu, v] : out.values_) v = a.values_.at(mu) * b.values_.at(mu);
  return out;
}

ClassFunction irreducible_character(const Partition& lambda) {
  const auto& table = char_table(lambda.size());
  ClassFunction f(lambda.size());
  const auto row = table.index_of(lambda);
  for (std::size_t j = 0; j < table.labels().size(); ++j) f.set(table.labels()[j], QRat(static_cast<int>(table.value(row, j))));
  return f;
}

ClassFunction trivial_character(int n) {
  ClassFunction f(n);
  for (const auto& mu : partitions_of(n)) f.set(mu, QRat(1));
  return f;
}

ClassFunction sign_character(int n) {
  ClassFunction f(n);
  for (const auto& mu : partitions_of(n)) f.set(mu, QRat(((mu.size() - mu.length()) % 2) ? -1 : 1));
  return f;
}

ClassFunction regular_character(int n) {
  ClassFunction f(n);
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  f.set(Partition(std::move(ones)), QRat(Rational(Integer(std::to_string(factorial(n))))));
  return f;
}

ClassFunction induce_product(const ClassFunction& f, const ClassFunction& g) {
  const int n = f.n() + g.n();
  ClassFunction out(n);
  for (const auto& rho : partitions_of(n)) {
    std::vector<std::pair<Partition, Partition>> splits;
    split_cycle_type(rho, f.n(), splits);
    QRat total;
    const Rational z_rho(Integer(std::to_string(z_stat(rho))));
    for (const auto& [alpha, beta] : splits) {
      const Rational weight = z_rho / Rational(Integer(std::to_string(z_stat(alpha) * z_stat(beta))));
      total += f.at(alpha) * g.at(beta) * weight;
    }
    out.set(rho, total);
  }
  return out;
}

QRat inner(const ClassFunction& f, const ClassFunction& g) {
  check_size(f.n(), g.n(), "inner");
  QRat total;
  for (const auto& [mu, v] : f.values()) {
    if (v.is_zero()) continue;
    const QRat& w = g.at(mu);
    if (w.is_zero()) continue;
    total += v * w * Rational(1, Integer(std::to_string(z_stat(mu))));
  }
  return total;
}

QRat molien_mult(const Partition& lambda, const Partition& mu) {
  check_size(lambda.size(), mu.size(), "molien_mult");
  const int n = lambda.size();
  const auto& table = char_table(n);
  const auto li = table.index_of(lambda);
  const auto mi = table.index_of(mu);
  QRat total;
  for (std::size_t j = 0; j < table.labels().size(); ++j) {
    const auto& rho = table.labels()[j];
    const long long prod = table.value(li, j) * table.value(mi, j);
    if (prod == 0) continue;
    QPoly den(1);
    for (int len : rho.parts()) den *= QPoly(1) - QPoly::q_power(len);
    den *= Rational(Integer(std::to_string(z_stat(rho))));
    total += QRat(QPoly(Rational(Integer(std::to_string(prod)))), den);
  }
  return total;
}

SymFunc frobenius0(const ClassFunction& f) {
  SymFunc out(Basis::s);
  for (const auto& lambda : partitions_of(f.n())) out.add_term(lambda, inner(f, irreducible_character(lambda)));
  return out;
}

ClassFunction to_class_function(const GradedCharacter& gc) {
  ClassFunction out(gc.n);
  for (const auto& [mu, m] : gc.mult) out += irreducible_character(mu) * m;
  return out;
}

GradedCharacter decompose(const ClassFunction& f) {
  GradedCharacter gc;
  gc.n = f.n();
  for (const auto& lambda : partitions_of(f.n())) gc.set(lambda, inner(f, irreducible_character(lambda)));
  return gc;
}

GradedCharacter restrict_graded(const GradedCharacter& gc) {
  if (gc.n < 1) throw std::invalid_argument("restrict_graded: nothing to restrict from S_0");
  GradedCharacter out;
  out.n = gc.n - 1;
  for (const auto& [mu, m] : gc.mult) {
    for (const auto& nu : restrict_irrep(mu)) out.set(nu, out.at(nu) + m);
  }
  return out;
}

}  // namespace symq
