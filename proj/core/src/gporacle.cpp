#include "symq/gporacle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "symq/hl.hpp"
#include "symq/sncharacter.hpp"

namespace symq {

namespace {

std::vector<int> padded_conjugate(const Partition& lambda, int n) {
  std::vector<int> c = conjugate(lambda).parts();
  c.resize(static_cast<std::size_t>(n), 0);
  return c;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

void check_oracle_size(const Partition& lambda) {
  if (lambda.size() > kMaxOracleN) {
    throw std::out_of_range("oracle supports |lambda| <= " + std::to_string(kMaxOracleN));
  }
}

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

Rational row_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : Rational(0);
}

// Fully reduced row echelon basis of a subspace of one monomial space.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : pivot_row_(dim, -1), scratch_(dim), touched_flag_(dim, false) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return pivot_row_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(const SparseRow& v) {
    touched_.clear();
    for (const auto& [c, a] : v) accumulate(c, a);
    // Rows are fully reduced, so each pivot entry is cleared by one row and
    // only non-pivot columns are introduced.
    for (std::size_t idx = 0; idx < touched_.size(); ++idx) {
      const std::size_t c = touched_[idx];
      const long r = pivot_row_[c];
      if (r < 0 || scratch_[c] == 0) continue;
      const Rational factor = scratch_[c];
      for (const auto& [col, val] : rows_[static_cast<std::size_t>(r)]) accumulate(col, -factor * val);
    }
    SparseRow reduced;
    for (std::size_t c : touched_) {
      if (pivot_row_[c] < 0 && scratch_[c] != 0) reduced.emplace_back(c, scratch_[c]);
      scratch_[c] = 0;
      touched_flag_[c] = false;
    }
    if (reduced.empty()) return false;
    std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::size_t pivot = reduced.front().first;
    const Rational inv = 1 / reduced.front().second;
    for (auto& e : reduced) e.second *= inv;

    for (auto& row : rows_) {
      const Rational f = row_entry(row, pivot);
      if (f == 0) continue;
      row = combine(row, reduced, f);
    }
    pivot_row_[pivot] = static_cast<long>(rows_.size());
    pivots_.push_back(pivot);
    rows_.push_back(std::move(reduced));
    return true;
  }

 private:
  void accumulate(std::size_t c, const Rational& a) {
    if (!touched_flag_[c]) {
      touched_flag_[c] = true;
      touched_.push_back(c);
    }
    scratch_[c] += a;
  }

  // row - f * other, both sorted by column.
  static SparseRow combine(const SparseRow& row, const SparseRow& other, const Rational& f) {
    SparseRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
      if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || other[j].first < row[i].first) {
        out.emplace_back(other[j].first, -f * other[j].second);
        ++j;
      } else {
        Rational v = row[i].second - f * other[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
  std::vector<Rational> scratch_;
  std::vector<bool> touched_flag_;
  std::vector<std::size_t> touched_;
};

// A permutation with the given cycle type on consecutive variables.
std::vector<int> representative(const Partition& cycle_type) {
  std::vector<int> sigma;
  int start = 0;
  for (int len : cycle_type.parts()) {
    for (int i = 0; i < len; ++i) sigma.push_back(start + (i + 1) % len);
    start += len;
  }
  return sigma;
}

SparseRow elementary_polynomial(const MonomialSpace& space, const std::vector<int>& subset, int t) {
  SparseRow row;
  std::vector<int> exps(static_cast<std::size_t>(space.n()), 0);
  for_each_subset(static_cast<int>(subset.size()), t, [&](const std::vector<int>& pick) {
    std::fill(exps.begin(), exps.end(), 0);
    for (int i : pick) exps[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])] = 1;
    row.emplace_back(space.index_of(exps), Rational(1));
  });
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace

std::vector<TanisakiGenerator> tanisaki_generators(const Partition& lambda) {
  const int n = lambda.size();
  const auto conj = padded_conjugate(lambda, n);
  std::vector<TanisakiGenerator> out;
  for (int k = 1; k <= n; ++k) {
    int tail = 0;
    for (int i = n - k; i < n; ++i) tail += conj[static_cast<std::size_t>(i)];
    for (int t = std::max(1, k - tail + 1); t <= k; ++t) {
      for_each_subset(n, k, [&](const std::vector<int>& s) { out.push_back({s, t}); });
    }
  }
  return out;
}

std::vector<TanisakiGenerator> tanisaki_generators_literal(const Partition& lambda) {
  const int n = lambda.size();
  const auto conj = padded_conjugate(lambda, n);
  std::vector<TanisakiGenerator> out;
  int d = 0;
  for (int r = 1; r <= n; ++r) {
    d += conj[static_cast<std::size_t>(r - 1)];
    for (int t = std::max(1, r - d); t <= r; ++t) {
      for_each_subset(n, r, [&](const std::vector<int>& s) { out.push_back({s, t}); });
    }
  }
  return out;
}

MonomialSpace::MonomialSpace(int n, int degree) : n_(n), degree_(degree) {
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      cur[static_cast<std::size_t>(var)] = left;
      monomials_.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
  };
  if (n == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    rec(0, degree);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialSpace::index_of(const std::vector<int>& exponents) const {
  auto it = index_.find(exponents);
  if (it == index_.end()) throw std::out_of_range("monomial not in this degree");
  return it->second;
}

GradedQuotient build_quotient(const Partition& lambda, const std::vector<TanisakiGenerator>& generators) {
  check_oracle_size(lambda);
  const int n = lambda.size();
  const int top = n_stat(lambda);
  const auto cycle_types = partitions_of(n);

  GradedQuotient out;
  out.lambda = lambda;

  std::vector<SparseRow> previous;  // echelon rows of I_{d-1}
  for (int d = 0; d <= top + 1; ++d) {
    const MonomialSpace space(n, d);
    EchelonBasis ideal(space.size());
    for (const auto& g : generators) {
      if (g.t == d) ideal.insert(elementary_polynomial(space, g.subset, g.t));
    }
    if (d > 0) {
      const MonomialSpace prev_space(n, d - 1);
      std::vector<int> exps;
      for (const auto& row : previous) {
        if (ideal.rank() == space.size()) break;
        for (int var = 0; var < n; ++var) {
          SparseRow shifted;
          shifted.reserve(row.size());
          for (const auto& [c, a] : row) {
            exps = prev_space.monomial(c);
            exps[static_cast<std::size_t>(var)]++;
            shifted.emplace_back(space.index_of(exps), a);
          }
          std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          ideal.insert(shifted);
        }
      }
    }
    const long quotient_dim = static_cast<long>(space.size() - ideal.rank());
    out.dims.push_back(quotient_dim);

    std::map<Partition, Rational> traces;
    for (const auto& rho : cycle_types) {
      const auto sigma = representative(rho);
      // Trace on the free piece: monomials constant along each cycle.
      long fixed = 0;
      for (std::size_t i = 0; i < space.size(); ++i) {
        const auto& e = space.monomial(i);
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) ok = e[static_cast<std::size_t>(k)] == e[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
        fixed += ok;
      }
      // Trace on the ideal: coefficient of row i in sigma(row i) is the
      // entry of sigma(row i) at pivot i, i.e. row i at sigma^{-1}(pivot).
      Rational ideal_trace = 0;
      std::vector<int> pre(static_cast<std::size_t>(n));
      for (std::size_t r = 0; r < ideal.rank(); ++r) {
        const auto& pivot_exps = space.monomial(ideal.pivots()[r]);
        for (int k = 0; k < n; ++k) {
          pre[static_cast<std::size_t>(k)] = pivot_exps[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
        }
        ideal_trace += row_entry(ideal.rows()[r], space.index_of(pre));
      }
      traces.emplace(rho, Rational(fixed) - ideal_trace);
    }
    out.traces.push_back(std::move(traces));
    previous = ideal.rows();
  }
  return out;
}

GradedQuotient build_quotient(const Partition& lambda) {
  check_oracle_size(lambda);
  return build_quotient(lambda, tanisaki_generators(lambda));
}

namespace {

void require_truncated(const GradedQuotient& quotient) {
  if (!quotient.truncated()) {
    throw std::logic_error("quotient for " + quotient.lambda.to_string() + " does not vanish in degree n(lambda)+1");
  }
}

}  // namespace

QPoly graded_dimension(const Partition& lambda) { return graded_dimension(build_quotient(lambda)); }

QPoly graded_dimension(const GradedQuotient& quotient) {
  require_truncated(quotient);
  std::vector<Rational> c;
  for (long d : quotient.dims) c.emplace_back(d);
  return QPoly(0, std::move(c));
}

GradedCharacter graded_character(const GradedQuotient& quotient) {
  require_truncated(quotient);
  const int n = quotient.lambda.size();
  const auto& table = char_table(n);
  GradedCharacter gc;
  gc.n = n;
  for (std::size_t i = 0; i < table.labels().size(); ++i) {
    std::vector<Rational> coeffs;
    for (const auto& traces : quotient.traces) {
      Rational m = 0;
      for (std::size_t j = 0; j < table.labels().size(); ++j) {
        const auto& rho = table.labels()[j];
        m += traces.at(rho) * Rational(static_cast<long>(table.value(i, j))) /
             Rational(static_cast<unsigned long>(z_stat(rho)));
      }
      coeffs.push_back(m);
    }
    gc.set(table.labels()[i], QRat(QPoly(0, std::move(coeffs))));
  }
  return gc;
}

GradedCharacter graded_character(const Partition& lambda) { return graded_character(build_quotient(lambda)); }

GpReport gp_report(const Partition& lambda) {
  const GradedQuotient quotient = build_quotient(lambda);
  GpReport r;
  r.lambda = lambda;
  r.truncation = quotient.truncated();
  if (!r.truncation) return r;
  r.gdim = graded_dimension(quotient);
  r.character = graded_character(quotient);
  r.rsoc = r.character.at(lambda) == QRat(QPoly::q_power(n_stat(lambda)));

  const int n = lambda.size();
  ClassFunction induced = trivial_character(0);
  for (int part : lambda.parts()) induced = induce_product(induced, trivial_character(part));
  const GradedCharacter expected = decompose(induced);
  bool ok = r.gdim.evaluate(1) == Rational(static_cast<unsigned long>(multinomial(lambda)));
  for (const auto& mu : partitions_of(n)) {
    ok = ok && r.character.at(mu).evaluate(1) == expected.at(mu).evaluate(1);
  }
  r.ind_triv = ok;
  return r;
}

OracleReport oracle_vs_symbolic(int n) {
  OracleReport report;
  report.n = n;
  for (const auto& lambda : partitions_of(n)) {
    const GradedCharacter oracle = graded_character(lambda);
    const GradedCharacter symbolic = char_R(lambda);
    ++report.partitions_checked;
    for (const auto& mu : partitions_of(n)) {
      const QPoly got = oracle.at(mu).as_poly();
      const QRat expected_rat = symbolic.at(mu);
      if (!expected_rat.is_polynomial()) {
        report.mismatches.push_back({lambda, mu, -1, Rational(0), Rational(0)});
        continue;
      }
      const QPoly expected = expected_rat.num();
      const int lo = std::min(got.low_degree(), expected.low_degree());
      const int hi = std::max(got.high_degree(), expected.high_degree());
      for (int d = lo; d <= hi; ++d) {
        if (got.coeff(d) != expected.coeff(d)) report.mismatches.push_back({lambda, mu, d, got.coeff(d), expected.coeff(d)});
      }
    }
  }
  return report;
}

}  // namespace symq
