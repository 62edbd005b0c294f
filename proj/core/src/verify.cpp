#include "symq/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "symq/gporacle.hpp"
#include "symq/hl.hpp"
#include "symq/sncharacter.hpp"
#include "symq/symfunc.hpp"

namespace symq {

namespace {

struct InstanceResult {
  long checks = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;

  void check(bool ok, CheckFailure f) {
    ++checks;
    if (!ok) failures.push_back(std::move(f));
  }
};

using Instance = std::function<InstanceResult()>;

struct SuiteDef {
  std::string name;
  int cap;
  std::function<std::vector<Instance>(int max_n, std::uint64_t seed)> build;
  bool seeded = false;
};

SymFunc in_p(const SymFunc& f) { return to_basis(f, Basis::p); }
SymFunc mul(const SymFunc& f, const SymFunc& g) { return product(in_p(f), in_p(g)); }

bool nonneg_int_poly(const QRat& c) { return c.is_polynomial() && c.as_poly().has_integer_coeffs() && c.as_poly().is_nonneg(); }

std::string str(const QRat& c) { return c.to_string(); }

CheckFailure failure(std::string identity, Partition lambda, Partition mu, std::string got, std::string expected,
                     std::string params = "") {
  return {std::move(identity), std::move(lambda), std::move(mu), std::move(params), std::move(got), std::move(expected)};
}

bool contains(const Partition& lambda, const Partition& nu) {
  if (nu.length() > lambda.length()) return false;
  for (int i = 1; i <= nu.length(); ++i) {
    if (nu.part(i) > lambda.part(i)) return false;
  }
  return true;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  }
  return out;
}

// Portable draws: the raw engine output is specified by the standard, the
// distributions are not.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

QPoly random_poly(Sampler& rng, int max_degree, int lo, int hi) {
  std::vector<Rational> c;
  for (int d = 0; d <= max_degree; ++d) c.emplace_back(rng.between(lo, hi));
  return QPoly(0, std::move(c));
}

SymFunc random_element(Sampler& rng, int degree) {
  static const Basis kBases[] = {Basis::s, Basis::P, Basis::Q, Basis::S, Basis::m};
  const Basis b = kBases[rng.below(5)];
  const auto parts = partitions_of(degree);
  SymFunc f(b);
  const int terms = rng.between(1, 2);
  for (int i = 0; i < terms; ++i) {
    f.add_term(parts[static_cast<std::size_t>(rng.below(static_cast<int>(parts.size())))],
               QRat(random_poly(rng, 1, -2, 2)));
  }
  return f;
}

// orthogonality

std::vector<Instance> orthogonality_instances(int max_n, std::uint64_t) {
  std::vector<Instance> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      out.emplace_back([n, lambda] {
        InstanceResult r;
        const SymFunc P = in_p(hl_P(lambda));
        const SymFunc Q = in_p(hl_Q(lambda));
        const SymFunc S = in_p(big_S(lambda));
        for (const auto& mu : partitions_of(n)) {
          const bool diag = lambda == mu;
          const QRat pq = hall_inner(P, in_p(hl_Q(mu)));
          r.check(pq == QRat(diag ? 1 : 0), failure("<P,Q>=delta", lambda, mu, str(pq), diag ? "1" : "0"));
          const QRat ss = hall_inner(S, SymFunc::basis_element(Basis::s, mu));
          r.check(ss == QRat(diag ? 1 : 0), failure("<S,s>=delta", lambda, mu, str(ss), diag ? "1" : "0"));
          const QRat qq = hall_inner(Q, in_p(hl_Q(mu)));
          const QRat want = diag ? QRat(b_poly(lambda)) : QRat(0);
          r.check(qq == want, failure("<Q,Q>=delta*b", lambda, mu, str(qq), str(want)));
        }
        return r;
      });
    }
  }
  return out;
}

// kostka-routes

std::vector<Instance> kostka_instances(int max_n, std::uint64_t) {
  std::vector<Instance> out;
  for (int n = 0; n <= max_n; ++n) {
    out.emplace_back([n] {
      InstanceResult r;
      const KostkaTable& tri = kostka_table(n);
      const KostkaTable orth = kostka_orthogonality(n);
      const auto& table = char_table(n);
      for (const auto& lambda : tri.labels()) {
        Rational dim_sum = 0;
        for (const auto& mu : tri.labels()) {
          const QPoly& a = tri.at(lambda, mu);
          const QPoly& b = orth.at(lambda, mu);
          r.check(a == b, failure("triangular=orthogonality", lambda, mu, a.to_string(), b.to_string()));
          if (lambda == mu) {
            r.check(a == QPoly(1), failure("diagonal=1", lambda, mu, a.to_string(), "1"));
          } else if (!dominance_leq(lambda, mu)) {
            r.check(a.is_zero(), failure("zero-off-dominance", lambda, mu, a.to_string(), "0"));
          }
          r.check(a.has_integer_coeffs() && a.is_nonneg(), failure("nonneg-integer", lambda, mu, a.to_string(), ">= 0"));
          dim_sum += a.evaluate(1) * Rational(static_cast<long>(table.dimension(mu)));
        }
        const Rational want(static_cast<unsigned long>(multinomial(lambda)));
        r.check(dim_sum == want,
                failure("q=1 dimension", lambda, Partition(), rational_to_string(dim_sum), rational_to_string(want)));
      }
      return r;
    });
  }
  return out;
}

// gp-restriction

std::vector<Instance> gp_restriction_instances(int max_n, std::uint64_t) {
  std::vector<Instance> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      out.emplace_back([n, lambda] {
        InstanceResult r;
        const GradedCharacter R = char_R(lambda);
        for (const auto& mu : partitions_of(n)) {
          const QRat c = R.at(mu);
          const bool ok = nonneg_int_poly(c) && (c.is_zero() || c.as_poly().high_degree() <= n_stat(lambda));
          r.check(ok, failure("char_R truncation", lambda, mu, str(c), "degree <= n(lambda)"));
        }
        const GradedCharacter lhs = restrict_graded(R);
        GradedCharacter rhs;
        rhs.n = n - 1;
        for (int j = 0; j < lambda.length(); ++j) {
          const GradedCharacter piece = char_R(remove_box(lambda, j + 1));
          const QRat shift(QPoly::q_power(j));
          for (const auto& [mu, c] : piece.mult) rhs.set(mu, rhs.at(mu) + shift * c);
        }
        for (const auto& mu : partitions_of(n - 1)) {
          r.check(lhs.at(mu) == rhs.at(mu), failure("restriction recursion", lambda, mu, str(lhs.at(mu)), str(rhs.at(mu))));
        }
        return r;
      });
    }
  }
  return out;
}

// gp-oracle

std::vector<Instance> gp_oracle_instances(int max_n, std::uint64_t) {
  std::vector<Instance> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      out.emplace_back([n, lambda] {
        InstanceResult r;
        const GpReport rep = gp_report(lambda);
        r.check(rep.truncation, failure("truncation", lambda, Partition(), "nonzero", "0"));
        r.check(rep.rsoc, failure("socle entry", lambda, lambda, rep.truncation ? str(rep.character.at(lambda)) : "-",
                                  QPoly::q_power(n_stat(lambda)).to_string()));
        r.check(rep.ind_triv, failure("q=1 induced trivial", lambda, Partition(), rep.gdim.to_string(),
                                      std::to_string(multinomial(lambda))));
        if (!rep.truncation) return r;
        const GradedCharacter sym = char_R(lambda);
        for (const auto& mu : partitions_of(n)) {
          r.check(rep.character.at(mu) == sym.at(mu),
                  failure("oracle=char_R", lambda, mu, str(rep.character.at(mu)), str(sym.at(mu))));
        }
        return r;
      });
    }
  }
  return out;
}

// pieri

std::vector<Instance> pieri_instances(int max_n, std::uint64_t) {
  std::vector<Instance> out;
  for (int k = 0; k <= max_n; ++k) {
    for (int a = 0; a <= k; ++a) {
      for (const auto& lambda : partitions_of(a)) {
        out.emplace_back([k, a, lambda] {
          InstanceResult r;
          const SymFunc s = SymFunc::basis_element(Basis::s, lambda);
          for (const auto& mu : partitions_of(k - a)) {
            const SymFunc prod = to_basis(mul(s, hl_P(mu)), Basis::P);
            for (const auto& [nu, c] : prod.terms()) {
              r.check(nonneg_int_poly(c), failure("s*P positivity", lambda, mu, str(c), "in Z>=0[q]", "nu=" + nu.to_string()));
            }
            if (prod.is_zero()) r.check(false, failure("s*P nonzero", lambda, mu, "0", "nonzero"));
          }
          return r;
        });
      }
    }
  }
  // e1 law, |lambda| <= max_n - 1
  for (int n = 0; n + 1 <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      out.emplace_back([lambda] {
        InstanceResult r;
        const auto coeffs = pieri_e1_P(lambda);
        std::map<Partition, int> grown;  // mu -> part value that grew
        for (int j = 1; j <= lambda.length() + 1; ++j) {
          grown[add_box(lambda, j)] = (j <= lambda.length() ? lambda.part(j) : 0) + 1;
        }
        r.check(coeffs.size() == grown.size(),
                failure("e1 support", lambda, Partition(), std::to_string(coeffs.size()), std::to_string(grown.size())));
        for (const auto& [mu, c] : coeffs) {
          auto it = grown.find(mu);
          if (it == grown.end()) {
            r.check(false, failure("e1 support", lambda, mu, c.to_string(), "0"));
            continue;
          }
          const QPoly qm = q_int(mu.multiplicity(it->second));
          bool ok = false;
          int a = -1;
          try {
            const QPoly ratio = c.exact_div(qm);
            ok = ratio.span() == 1 && ratio.leading_coeff() == 1 && ratio.low_degree() >= 0;
            if (ok) a = ratio.low_degree();
          } catch (const std::domain_error&) {
          }
          r.check(ok && a == 0, failure("e1 coefficient = q^a [m]_q, a = 0", lambda, mu, c.to_string(), qm.to_string()));
        }
        return r;
      });
    }
  }
  return out;
}

// skew

std::vector<Instance> skew_instances(int max_n, std::uint64_t) {
  std::vector<Instance> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      out.emplace_back([n, lambda] {
        InstanceResult r;
        std::map<Partition, SymFunc> skews;
        for (const auto& nu : partitions_up_to(n)) {
          const SymFunc sk = to_basis(skew_Q(lambda, nu), Basis::S);
          if (!contains(lambda, nu)) {
            r.check(sk.is_zero(), failure("skew zero outside", lambda, nu, sk.to_string(), "0"));
          }
          for (const auto& [gamma, c] : sk.terms()) {
            r.check(nonneg_int_poly(c), failure("skew S-positivity", lambda, nu, str(c), "in Z>=0[q]", "gamma=" + gamma.to_string()));
          }
          skews.emplace(nu, sk);
        }
        const TensorSymFunc delta = to_basis(coproduct(in_p(hl_Q(lambda))), Basis::S, Basis::Q);
        for (const auto& [key, c] : delta.terms()) {
          r.check(nonneg_int_poly(c), failure("coproduct (S,Q)-positivity", lambda, key.second, str(c), "in Z>=0[q]",
                                              "gamma=" + key.first.to_string()));
        }
        // Delta(Q_lambda) = sum_nu Q_{lambda/nu} (x) Q_nu
        for (const auto& [nu, sk] : skews) {
          for (const auto& gamma : partitions_of(n - nu.size())) {
            const QRat a = delta.coeff(gamma, nu);
            const QRat b = sk.coeff(gamma);
            r.check(a == b, failure("coproduct = sum of skews", lambda, nu, str(a), str(b), "gamma=" + gamma.to_string()));
          }
        }
        return r;
      });
    }
  }
  return out;
}

// big-schur

GradedCharacter molien_character(const Partition& lambda) {
  GradedCharacter gc;
  gc.n = lambda.size();
  for (const auto& mu : partitions_of(lambda.size())) gc.set(mu, molien_mult(lambda, mu));
  return gc;
}

std::vector<Instance> big_schur_instances(int max_n, std::uint64_t seed) {
  std::vector<Instance> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      out.emplace_back([n, lambda] {
        InstanceResult r;
        const SymFunc s = SymFunc::basis_element(Basis::s, lambda);
        const GradedCharacter molien = molien_character(lambda);
        SymFunc sum(Basis::S);
        for (const auto& [mu, c] : molien.mult) sum.add_term(mu, c);
        const SymFunc sum_s = to_basis(sum, Basis::s);
        r.check(sum_s == s, failure("s = sum molien * S", lambda, Partition(), sum_s.to_string(), s.to_string()));
        const SymFunc image = to_basis(psi(molien), Basis::s);
        r.check(image == s, failure("psi(molien) = s", lambda, Partition(), image.to_string(), s.to_string()));
        const GradedCharacter back = psi_inverse(s);
        for (const auto& mu : partitions_of(n)) {
          r.check(back.at(mu) == molien.at(mu), failure("psi_inverse(s) = molien", lambda, mu, str(back.at(mu)), str(molien.at(mu))));
        }
        // L_lambda (x) R_(1^n)
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const ClassFunction tensor =
            pointwise(irreducible_character(lambda), to_class_function(char_R(Partition(ones))));
        const GradedCharacter gc = decompose(tensor);
        const SymFunc lhs = s * QRat(q_pochhammer(n));
        const SymFunc rhs = to_basis(psi(gc), Basis::s);
        r.check(lhs == rhs, failure("s*(q;q)_n = psi(L (x) R_(1^n))", lambda, Partition(), rhs.to_string(), lhs.to_string()));
        return r;
      });
    }
  }
  // Expanding psi(gc) in P by pairing with Q.
  for (int n = 1; n <= max_n; ++n) {
    out.emplace_back([n, seed] {
      InstanceResult r;
      Sampler rng(seed + static_cast<std::uint64_t>(n));
      for (int sample = 0; sample < 3; ++sample) {
        GradedCharacter gc;
        gc.n = n;
        for (const auto& mu : partitions_of(n)) gc.set(mu, QRat(random_poly(rng, 2, 0, 3)));
        const SymFunc f = psi(gc);
        const SymFunc inP = to_basis(f, Basis::P);
        const SymFunc fp = in_p(f);
        for (const auto& lambda : partitions_of(n)) {
          const QRat paired = hall_inner(fp, in_p(hl_Q(lambda)));
          r.check(paired == inP.coeff(lambda), failure("P-coefficient = <psi(gc), Q>", lambda, Partition(), str(paired),
                                                      str(inP.coeff(lambda)), "sample=" + std::to_string(sample)));
        }
      }
      return r;
    });
  }
  return out;
}

// hopf

std::vector<Instance> hopf_instances(int max_n, std::uint64_t seed) {
  std::vector<Instance> out;
  for (int k = 0; k <= max_n; ++k) {
    for (int a = 0; a <= k; ++a) {
      for (const auto& lambda : partitions_of(a)) {
        out.emplace_back([k, a, lambda] {
          InstanceResult r;
          for (const auto& mu : partitions_of(k - a)) {
            const SymFunc lhs = frobenius0(induce_product(irreducible_character(lambda), irreducible_character(mu)));
            const SymFunc rhs = convert(product(SymFunc::basis_element(Basis::s, lambda), SymFunc::basis_element(Basis::s, mu)), Basis::s);
            r.check(convert(lhs, Basis::s) == rhs, failure("Frobenius of induction = product", lambda, mu, lhs.to_string(), rhs.to_string()));
          }
          return r;
        });
      }
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      out.emplace_back([lambda] {
        InstanceResult r;
        for (Basis b : {Basis::s, Basis::Q}) {
          const TensorSymFunc delta = coproduct(in_p(SymFunc::basis_element(b, lambda)));
          SymFunc acc(Basis::p);
          for (const auto& [key, c] : delta.terms()) {
            acc += product(antipode(SymFunc::basis_element(Basis::p, key.first)), SymFunc::basis_element(Basis::p, key.second)) * c;
          }
          r.check(acc.is_zero(), failure("m(S (x) id)Delta = counit", lambda, Partition(), acc.to_string(), "0",
                                         "basis=" + basis_name(b)));
        }
        return r;
      });
    }
  }
  for (int k = 1; k <= max_n; ++k) {
    out.emplace_back([k, seed] {
      InstanceResult r;
      Sampler rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k)));
      for (int sample = 0; sample < 3; ++sample) {
        const int a = rng.between(0, k);
        const SymFunc f = random_element(rng, a);
        const SymFunc g = random_element(rng, k - a);
        const TensorSymFunc lhs = coproduct(mul(f, g));
        const TensorSymFunc rhs = tensor_product(coproduct(in_p(f)), coproduct(in_p(g)));
        r.check(lhs == rhs, failure("Delta(fg) = Delta(f)Delta(g)", Partition(), Partition(), lhs.to_string(), rhs.to_string(),
                                    "f=" + f.to_string() + "; g=" + g.to_string()));
      }
      return r;
    });
  }
  return out;
}

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"orthogonality", 7, orthogonality_instances},
      {"kostka-routes", 7, kostka_instances},
      {"gp-restriction", 7, gp_restriction_instances},
      {"gp-oracle", 5, gp_oracle_instances},
      {"pieri", 7, pieri_instances},
      {"skew", 6, skew_instances},
      {"big-schur", 6, big_schur_instances, true},
      {"hopf", 7, hopf_instances, true},
  };
  return defs;
}

std::vector<InstanceResult> run_instances(const std::vector<Instance>& instances, int jobs) {
  std::vector<InstanceResult> results(instances.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = instances[i]();
    } catch (const std::exception& e) {
      results[i] = InstanceResult();
      results[i].check(false, failure("exception", Partition(), Partition(), e.what(), "no exception",
                                      "instance=" + std::to_string(i)));
    }
  };
  if (jobs <= 1 || instances.size() < 2) {
    for (std::size_t i = 0; i < instances.size(); ++i) run_one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), instances.size());
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) run_one(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : suites()) v.push_back(d.name);
    return v;
  }();
  return names;
}

int suite_cap(const std::string& name) {
  for (const auto& d : suites()) {
    if (d.name == name) return d.cap;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport run_suite(const std::string& name, int max_n, int jobs) {
  const SuiteDef* def = nullptr;
  for (const auto& d : suites()) {
    if (d.name == name) def = &d;
  }
  if (def == nullptr) throw std::invalid_argument("unknown suite: " + name);
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = name;
  report.max_n = max_n;
  report.effective_max_n = std::min(max_n, def->cap);
  if (max_n > def->cap) {
    report.warnings.push_back("max_n " + std::to_string(max_n) + " capped at " + std::to_string(def->cap));
  }
  if (def->seeded) report.seed = kSuiteSeed;

  const auto instances = def->build(report.effective_max_n, kSuiteSeed);
  for (auto& res : run_instances(instances, jobs)) {
    report.checks_run += res.checks;
    for (auto& f : res.failures) report.failures.push_back(std::move(f));
    for (auto& note : res.notes) report.notes.push_back(std::move(note));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SuiteReport> run_all(int max_n, int jobs) {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, max_n, jobs));
  return out;
}

}  // namespace symq
