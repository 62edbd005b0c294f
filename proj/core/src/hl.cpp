#include "symq/hl.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "symq/sncharacter.hpp"

namespace symq {

namespace {

// Polynomial in q with machine-integer coefficients, index = degree.
using IntPoly = std::vector<long long>;
using Exponents = std::vector<int>;

void add_shifted(IntPoly& dst, const IntPoly& src, std::size_t shift, long long sign) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    long long term = 0;
    if (__builtin_mul_overflow(src[i], sign, &term) ||
        __builtin_add_overflow(dst[i + shift], term, &dst[i + shift])) {
      throw std::overflow_error("integer overflow expanding the symmetrization kernel");
    }
  }
}

// prod_{i<j} (x_i - q x_j) in n variables, as exponent vector -> coefficient.
std::map<Exponents, IntPoly> build_kernel(int n) {
  std::map<Exponents, IntPoly> cur;
  cur.emplace(Exponents(static_cast<std::size_t>(n), 0), IntPoly{1});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::map<Exponents, IntPoly> next;
      for (const auto& [e, poly] : cur) {
        Exponents ei = e;
        ei[static_cast<std::size_t>(i)]++;
        add_shifted(next[ei], poly, 0, 1);
        Exponents ej = e;
        ej[static_cast<std::size_t>(j)]++;
        add_shifted(next[ej], poly, 1, -1);
      }
      cur = std::move(next);
    }
  }
  return cur;
}

struct KernelCache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const std::map<Exponents, IntPoly>>> kernels;
};

std::shared_ptr<const std::map<Exponents, IntPoly>> kernel(int n) {
  static KernelCache cache;
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.kernels.find(n); it != cache.kernels.end()) return it->second;
  }
  auto built = std::make_shared<const std::map<Exponents, IntPoly>>(build_kernel(n));
  std::lock_guard lock(cache.mutex);
  return cache.kernels.try_emplace(n, std::move(built)).first->second;
}

QPoly to_qpoly(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (long long v : p) c.emplace_back(static_cast<long>(v));
  return QPoly(0, std::move(c));
}

// v_lambda(q) = prod_{i >= 0} [m_i]_q!, with m_0 = n - length.
QPoly symmetrizer_normalization(const Partition& lambda, int n) {
  QPoly v = q_factorial(n - lambda.length());
  if (!lambda.empty()) {
    for (int i = 1; i <= lambda.part(1); ++i) v *= q_factorial(lambda.multiplicity(i));
  }
  return v;
}

// Antisymmetrize x^lambda prod_{i<j}(x_i - q x_j) over S_n and divide by the
// Vandermonde determinant: a_alpha / a_delta = s_{alpha - delta}.
SymFunc compute_hl_P(const Partition& lambda) {
  const int n = lambda.size();
  if (n > kMaxHlDegree) {
    throw std::out_of_range("hl_P: degree " + std::to_string(n) + " exceeds bound " + std::to_string(kMaxHlDegree));
  }
  const auto kern = kernel(n);
  std::map<Partition, IntPoly> numerators;
  Exponents alpha(static_cast<std::size_t>(n));
  for (const auto& [beta, poly] : *kern) {
    for (int i = 0; i < n; ++i) alpha[static_cast<std::size_t>(i)] = lambda.part(i + 1) + beta[static_cast<std::size_t>(i)];
    int inversions = 0;
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int a = alpha[static_cast<std::size_t>(i)];
        const int b = alpha[static_cast<std::size_t>(j)];
        if (a == b) {
          distinct = false;
          break;
        }
        inversions += (a < b);
      }
    }
    if (!distinct) continue;
    Exponents sorted = alpha;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<int> nu;
    for (int i = 0; i < n; ++i) {
      const int part = sorted[static_cast<std::size_t>(i)] - (n - 1 - i);
      if (part > 0) nu.push_back(part);
    }
    add_shifted(numerators[Partition(std::move(nu))], poly, 0, inversions % 2 ? -1 : 1);
  }
  const QPoly v = symmetrizer_normalization(lambda, n);
  SymFunc out(Basis::s);
  for (const auto& [nu, poly] : numerators) {
    const QPoly numerator = to_qpoly(poly);
    if (numerator.is_zero()) continue;
    try {
      out.add_term(nu, QRat(numerator.exact_div(v)));
    } catch (const std::domain_error&) {
      throw InternalInconsistency("symmetrization of P_" + lambda.to_string() + " not divisible by v_lambda");
    }
  }
  return out;
}

template <class Key, class Value>
struct MemoCache {
  std::mutex mutex;
  std::map<Key, std::shared_ptr<const Value>> entries;

  template <class Fn>
  const Value& get(const Key& key, Fn&& compute) {
    {
      std::lock_guard lock(mutex);
      if (auto it = entries.find(key); it != entries.end()) return *it->second;
    }
    auto built = std::make_shared<const Value>(compute());
    std::lock_guard lock(mutex);
    return *entries.try_emplace(key, std::move(built)).first->second;
  }
};

const Matrix<QRat>& to_s_matrix(const HlTransition& t, Basis b) {
  switch (b) {
    case Basis::P: return t.P_to_s;
    case Basis::Q: return t.Q_to_s;
    case Basis::S: return t.S_to_s;
    default: throw std::invalid_argument("not a Hall-Littlewood basis");
  }
}

const Matrix<QRat>& from_s_matrix(const HlTransition& t, Basis b) {
  switch (b) {
    case Basis::P: return t.s_to_P;
    case Basis::Q: return t.s_to_Q;
    case Basis::S: return t.s_to_S;
    default: throw std::invalid_argument("not a Hall-Littlewood basis");
  }
}

std::size_t label_index(const std::vector<Partition>& labels, const Partition& lambda) {
  auto it = std::lower_bound(labels.begin(), labels.end(), lambda);
  if (it == labels.end() || *it != lambda) throw std::invalid_argument("partition " + lambda.to_string() + " not in table");
  return static_cast<std::size_t>(it - labels.begin());
}

void require_hl_degree(int n) {
  if (n < 0 || n > kMaxHlDegree) {
    throw std::out_of_range("degree " + std::to_string(n) + " outside the Hall-Littlewood bound " +
                            std::to_string(kMaxHlDegree));
  }
}

QPoly require_poly(const QRat& x, const std::string& what) {
  if (!x.is_polynomial()) throw InternalInconsistency(what + " is not a polynomial: " + x.to_string());
  return x.num();
}

QPoly one_minus_q_product(const Partition& lambda) {
  QPoly out(1);
  for (int r : lambda.parts()) out *= QPoly(1) - QPoly::q_power(r);
  return out;
}

}  // namespace

SymFunc hl_P(const Partition& lambda) {
  static MemoCache<Partition, SymFunc> cache;
  return cache.get(lambda, [&] { return compute_hl_P(lambda); });
}

SymFunc hl_Q(const Partition& lambda) { return hl_P(lambda) * QRat(b_poly(lambda)); }

SymFunc big_S(const Partition& lambda) {
  return plethysm_one_minus_q(SymFunc::basis_element(Basis::s, lambda));
}

const HlTransition& hl_transition(int n) {
  require_hl_degree(n);
  static MemoCache<int, HlTransition> cache;
  return cache.get(n, [n] {
    HlTransition t;
    t.n = n;
    t.labels = partitions_of(n);
    const std::size_t k = t.labels.size();
    auto rows = [&](auto&& element) {
      Matrix<QRat> m(k, std::vector<QRat>(k));
      for (std::size_t i = 0; i < k; ++i) {
        const SymFunc f = element(t.labels[i]);
        for (const auto& [nu, c] : f.terms()) m[i][label_index(t.labels, nu)] = c;
      }
      return m;
    };
    t.P_to_s = rows([](const Partition& l) { return hl_P(l); });
    t.Q_to_s = rows([](const Partition& l) { return hl_Q(l); });
    t.S_to_s = rows([](const Partition& l) { return convert(big_S(l), Basis::s); });
    t.s_to_P = invert(t.P_to_s);
    t.s_to_Q = invert(t.Q_to_s);
    t.s_to_S = invert(t.S_to_s);
    return t;
  });
}

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  if (is_classical(f.basis()) && is_classical(target)) return convert(f, target);

  SymFunc in_s(Basis::s);
  if (is_classical(f.basis())) {
    in_s = convert(f, Basis::s);
  } else {
    for (const auto& [lambda, c] : f.terms()) {
      const auto& t = hl_transition(lambda.size());
      const auto& row = to_s_matrix(t, f.basis())[label_index(t.labels, lambda)];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_zero()) in_s.add_term(t.labels[j], c * row[j]);
      }
    }
  }
  if (is_classical(target)) return convert(in_s, target);

  SymFunc out(target);
  for (const auto& [nu, c] : in_s.terms()) {
    const auto& t = hl_transition(nu.size());
    const auto& row = from_s_matrix(t, target)[label_index(t.labels, nu)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) out.add_term(t.labels[j], c * row[j]);
    }
  }
  return out;
}

TensorSymFunc to_basis(const TensorSymFunc& t, Basis left, Basis right) {
  std::map<Partition, SymFunc> left_cache, right_cache;
  auto image = [](std::map<Partition, SymFunc>& cache, Basis from, Basis to, const Partition& lambda) -> const SymFunc& {
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, to_basis(SymFunc::basis_element(from, lambda), to)).first;
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

// ------------------------------------------------------------ Kostka

KostkaTable::KostkaTable(int n, std::vector<Partition> labels, std::vector<std::vector<QPoly>> entries)
    : n_(n), labels_(std::move(labels)), entries_(std::move(entries)) {}

std::size_t KostkaTable::index_of(const Partition& lambda) const { return label_index(labels_, lambda); }

const QPoly& KostkaTable::at(const Partition& lambda, const Partition& mu) const {
  return entries_[index_of(lambda)][index_of(mu)];
}

KostkaTable kostka_triangular(int n) {
  require_hl_degree(n);
  const auto& t = hl_transition(n);
  const std::size_t k = t.labels.size();
  std::vector<std::vector<QPoly>> entries(k, std::vector<QPoly>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      QRat acc;
      for (std::size_t r = 0; r < k; ++r) {
        if (t.Q_to_s[i][r].is_zero() || t.s_to_S[r][j].is_zero()) continue;
        acc += t.Q_to_s[i][r] * t.s_to_S[r][j];
      }
      entries[i][j] = require_poly(acc, "Kostka entry (" + t.labels[i].to_string() + "; " + t.labels[j].to_string() + ")");
    }
  }
  return KostkaTable(n, t.labels, std::move(entries));
}

KostkaTable kostka_orthogonality(int n) {
  require_hl_degree(n);
  const auto labels = partitions_of(n);
  const std::size_t k = labels.size();
  std::vector<SymFunc> big;
  big.reserve(k);
  for (const auto& mu : labels) big.push_back(to_power_sums(big_S(mu)));
  Matrix<QRat> gram(k, std::vector<QRat>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      gram[i][j] = hall_inner(big[i], big[j]);
      gram[j][i] = gram[i][j];
    }
  }

  // G = L D L^T with L unit lower triangular along the enumeration order.
  Matrix<QRat> lower(k, std::vector<QRat>(k));
  std::vector<QRat> diag(k);
  for (std::size_t i = 0; i < k; ++i) {
    QRat d = gram[i][i];
    for (std::size_t r = 0; r < i; ++r) {
      if (!lower[i][r].is_zero()) d -= lower[i][r] * lower[i][r] * diag[r];
    }
    if (d.is_zero()) throw InternalInconsistency("Gram matrix of big Schur functions has a vanishing pivot");
    diag[i] = d;
    lower[i][i] = QRat(1);
    for (std::size_t j = i + 1; j < k; ++j) {
      QRat v = gram[j][i];
      for (std::size_t r = 0; r < i; ++r) {
        if (!lower[j][r].is_zero() && !lower[i][r].is_zero()) v -= lower[j][r] * lower[i][r] * diag[r];
      }
      lower[j][i] = v / d;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!(diag[i] == QRat(b_poly(labels[i])))) {
      throw InternalInconsistency("LDL pivot for " + labels[i].to_string() + " is " + diag[i].to_string() +
                                  ", expected b_lambda");
    }
  }

  // C = L^{-1}, by forward substitution.
  std::vector<std::vector<QPoly>> entries(k, std::vector<QPoly>(k));
  Matrix<QRat> inv(k, std::vector<QRat>(k));
  for (std::size_t i = 0; i < k; ++i) {
    inv[i][i] = QRat(1);
    for (std::size_t j = i; j-- > 0;) {
      QRat acc;
      for (std::size_t r = j + 1; r <= i; ++r) {
        if (!inv[i][r].is_zero() && !lower[r][j].is_zero()) acc -= inv[i][r] * lower[r][j];
      }
      inv[i][j] = acc;
    }
    for (std::size_t j = 0; j < k; ++j) {
      entries[i][j] = require_poly(inv[i][j], "orthogonality Kostka entry (" + labels[i].to_string() + "; " + labels[j].to_string() + ")");
    }
  }
  return KostkaTable(n, labels, std::move(entries));
}

const KostkaTable& kostka_table(int n) {
  require_hl_degree(n);
  static MemoCache<int, KostkaTable> cache;
  return cache.get(n, [n] { return kostka_triangular(n); });
}

// --------------------------------------------------- characteristic map

SymFunc psi(const GradedCharacter& gc) {
  SymFunc out(Basis::S);
  for (const auto& [mu, m] : gc.mult) out.add_term(mu, m);
  return out;
}

GradedCharacter psi_inverse(const SymFunc& f) {
  const auto degree = f.degree();
  if (!f.is_zero() && !degree) throw std::invalid_argument("psi_inverse: element is not homogeneous");
  GradedCharacter gc;
  gc.n = degree.value_or(0);
  const SymFunc in_S = to_basis(f, Basis::S);
  for (const auto& [mu, c] : in_S.terms()) gc.set(mu, c);
  return gc;
}

GradedCharacter char_K(const Partition& lambda) {
  const auto& table = kostka_table(lambda.size());
  GradedCharacter gc;
  gc.n = lambda.size();
  for (const auto& mu : table.labels()) gc.set(mu, QRat(table.at(lambda, mu)));
  return gc;
}

GradedCharacter char_R(const Partition& lambda) {
  const auto& table = kostka_table(lambda.size());
  const int shift = n_stat(lambda);
  GradedCharacter gc;
  gc.n = lambda.size();
  for (const auto& mu : table.labels()) gc.set(mu, QRat(table.at(lambda, mu).bar().shifted(shift)));
  return gc;
}

SymFunc skew_Q(const Partition& lambda, const Partition& nu) {
  if (nu.size() > lambda.size()) throw std::invalid_argument("skew_Q: |nu| exceeds |lambda|");
  const TensorSymFunc delta = coproduct(to_power_sums(hl_Q(lambda)));
  const SymFunc p_nu = to_power_sums(hl_P(nu));
  std::map<Partition, QRat> pairing;  // <p_b, P_nu>
  for (const auto& [b, c] : p_nu.terms()) {
    pairing.emplace(b, c * Rational(static_cast<unsigned long>(z_stat(b))) / QRat(one_minus_q_product(b)));
  }
  SymFunc out(Basis::p);
  for (const auto& [key, c] : delta.terms()) {
    auto it = pairing.find(key.second);
    if (it != pairing.end()) out.add_term(key.first, c * it->second);
  }
  return out;
}

std::map<Partition, QPoly> pieri_e1_P(const Partition& lambda) {
  const SymFunc e1P = product(SymFunc::basis_element(Basis::p, Partition({1})), to_power_sums(hl_P(lambda)));
  std::map<Partition, QPoly> out;
  const SymFunc in_P = to_basis(e1P, Basis::P);
  for (const auto& [mu, c] : in_P.terms()) out.emplace(mu, require_poly(c, "Pieri coefficient"));
  return out;
}

}  // namespace symq
