// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "symq/gporacle.hpp"
#include "symq/hl.hpp"
#include "symq/json_io.hpp"
#include "symq/sncharacter.hpp"
#include "symq/verify.hpp"

#ifdef SYMQ_HAVE_CLI
#include "cache.hpp"
#include "cli.hpp"
#endif

using namespace symq;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  long checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  long failed = 0;
};

SymFunc el(Basis b, const Partition& lambda) { return SymFunc::basis_element(b, lambda); }
SymFunc in_p(const SymFunc& f) { return to_basis(f, Basis::p); }

bool nonneg_int(const QRat& c) {
  return c.is_zero() || (c.is_polynomial() && c.as_poly().has_integer_coeffs() && c.as_poly().is_nonneg() && c.as_poly().offset() >= 0);
}

std::string tag(const Partition& a, const Partition& b = Partition()) { return "(" + a.to_string() + "|" + b.to_string() + ")"; }

Outcome orthogonality() {
  Outcome o;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const SymFunc P = in_p(el(Basis::P, lambda)), Q = in_p(el(Basis::Q, lambda)), S = in_p(el(Basis::S, lambda));
      for (const auto& mu : partitions_of(n)) {
        const QRat delta(lambda == mu ? 1 : 0);
        const SymFunc Qmu = in_p(el(Basis::Q, mu));
        o.check(hall_inner(P, Qmu) == delta, "<P,Q> " + tag(lambda, mu));
        o.check(hall_inner(S, el(Basis::s, mu)) == delta, "<S,s> " + tag(lambda, mu));
        o.check(hall_inner(Q, Qmu) == (lambda == mu ? QRat(b_poly(lambda)) : QRat(0)), "<Q,Q> " + tag(lambda, mu));
      }
    }
  }
  return o;
}

Outcome kostka_routes() {
  Outcome o;
  for (int n = 0; n <= 6; ++n) {
    const KostkaTable tri = kostka_triangular(n);
    const KostkaTable orth = kostka_orthogonality(n);
    for (const auto& lambda : tri.labels()) {
      for (const auto& mu : tri.labels()) {
        const QPoly& a = tri.at(lambda, mu);
        o.check(a == orth.at(lambda, mu), "routes " + tag(lambda, mu));
        if (lambda == mu) o.check(a == QPoly(1), "diagonal " + tag(lambda));
        if (!dominance_leq(lambda, mu)) o.check(a.is_zero(), "off-dominance " + tag(lambda, mu));
        o.check(nonneg_int(QRat(a)), "Z>=0[q] " + tag(lambda, mu));
      }
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const GradedQuotient g = build_quotient(lambda);
      o.check(g.truncated(), "truncation " + tag(lambda));
      if (!g.truncated()) continue;
      const GradedCharacter oracle = graded_character(g);
      o.check(oracle == char_R(lambda), "oracle=char_R " + tag(lambda));
      o.check(oracle.at(lambda) == QRat(QPoly::q_power(n_stat(lambda))), "socle " + tag(lambda));
      o.check(graded_dimension(g).evaluate(Rational(1)) == Rational(static_cast<long>(multinomial(lambda))), "q=1 dimension " + tag(lambda));
    }
  }
  o.note = "n<=5 (n=5 optional, included)";
  return o;
}

Outcome gp_restriction() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const GradedCharacter lhs = restrict_graded(char_R(lambda));
      GradedCharacter rhs;
      rhs.n = n - 1;
      for (int j = 0; j < lambda.length(); ++j) {
        for (const auto& [mu, c] : char_R(remove_box(lambda, j + 1)).mult) rhs.set(mu, rhs.at(mu) + c * QRat(QPoly::q_power(j)));
      }
      bool same = true;
      for (const auto& mu : partitions_of(n - 1)) same = same && lhs.at(mu) == rhs.at(mu);
      o.check(same, "restriction " + tag(lambda));
    }
  }
  return o;
}

Outcome positivity() {
  Outcome o;
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; a + b <= 6; ++b) {
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          const SymFunc f = to_basis(product(el(Basis::s, lambda), in_p(el(Basis::P, mu))), Basis::P);
          bool ok = true;
          for (const auto& [nu, c] : f.terms()) ok = ok && nonneg_int(c);
          o.check(ok, "s.P " + tag(lambda, mu));
        }
      }
    }
  }
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const TensorSymFunc d = to_basis(coproduct(in_p(el(Basis::Q, lambda))), Basis::S, Basis::Q);
      bool ok = true;
      for (const auto& [key, c] : d.terms()) ok = ok && nonneg_int(c);
      o.check(ok, "Delta Q " + tag(lambda));
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& nu : partitions_of(k)) {
          const SymFunc f = to_basis(skew_Q(lambda, nu), Basis::S);
          bool ok = true;
          for (const auto& [mu, c] : f.terms()) ok = ok && nonneg_int(c);
          o.check(ok, "skew " + tag(lambda, nu));
        }
      }
    }
  }
  return o;
}

Outcome big_schur() {
  Outcome o;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      SymFunc rhs(Basis::S);
      for (const auto& mu : partitions_of(n)) rhs.add_term(mu, molien_mult(lambda, mu));
      o.check(to_basis(el(Basis::s, lambda), Basis::S) == rhs, "Molien " + tag(lambda));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const ClassFunction coinv = to_class_function(char_R(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
    for (const auto& lambda : partitions_of(n)) {
      const SymFunc lhs = to_basis(el(Basis::s, lambda), Basis::S) * QRat(q_pochhammer(n));
      const SymFunc rhs = psi(decompose(pointwise(irreducible_character(lambda), coinv)));
      o.check(lhs == rhs, "coinvariant form " + tag(lambda));
    }
  }
  return o;
}

Outcome pieri() {
  Outcome o;
  std::optional<int> a_small;
  std::set<int> seen;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& [mu, c] : pieri_e1_P(lambda)) {
        int grown = 0;
        for (int j = 1; j <= mu.length(); ++j) {
          if (mu.part(j) != lambda.part(j)) {
            grown = mu.part(j);
            break;
          }
        }
        const int a = c.offset();
        const bool shape = a >= 0 && c == QPoly::q_power(a) * q_int(mu.multiplicity(grown));
        o.check(shape, "q^a[m]_q " + tag(lambda, mu));
        if (!shape) continue;
        seen.insert(a);
        if (n <= 2 && !a_small) a_small = a;
      }
    }
  }
  o.check(seen.size() == 1 && a_small && seen.count(*a_small), "a constant across the sweep");
  std::string values;
  for (int a : seen) values += (values.empty() ? "" : ",") + std::to_string(a);
  o.note = "a=" + values;
  return o;
}

Outcome hopf() {
  Outcome o;
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; a + b <= 6; ++b) {
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          const SymFunc lhs = frobenius0(induce_product(irreducible_character(lambda), irreducible_character(mu)));
          o.check(lhs == product(el(Basis::s, lambda), el(Basis::s, mu)), "Sind " + tag(lambda, mu));
        }
      }
    }
  }
  std::mt19937_64 rng(kSeed);
  const Basis bases[] = {Basis::m, Basis::e, Basis::h, Basis::s, Basis::p, Basis::P, Basis::Q, Basis::S};
  auto pick = [&](int n) {
    const auto ps = partitions_of(n);
    return ps[rng() % ps.size()];
  };
  const int samples = 40;
  for (int i = 0; i < samples; ++i) {
    const int nf = static_cast<int>(rng() % 4), ng = static_cast<int>(rng() % (7 - nf));
    const Basis bf = bases[rng() % 8], bg = bases[rng() % 8];
    const Partition lf = pick(nf), lg = pick(ng);
    const SymFunc f = in_p(el(bf, lf)), g = in_p(el(bg, lg));
    const TensorSymFunc lhs = convert(coproduct(product(f, g)), Basis::p, Basis::p);
    const TensorSymFunc rhs = tensor_product(coproduct(f), coproduct(g));
    o.check(lhs == rhs, "Delta(fg) " + basis_name(bf) + tag(lf) + " " + basis_name(bg) + tag(lg));
  }
  o.note = std::to_string(samples) + " sampled pairs, seed " + std::to_string(kSeed);
  return o;
}

template <class T>
bool round_trips(const T& value) {
  const std::string text = to_json(value).dump();
  const T back = from_json<T>(Json::parse(text));
  return back == value && to_json(back).dump() == text;
}

Outcome infrastructure() {
  Outcome o;
  for (int n = 0; n <= 6; ++n) {
    o.check(round_trips(kostka_table(n)), "json kostka n=" + std::to_string(n));
    for (const auto& lambda : partitions_of(n)) {
      o.check(round_trips(char_R(lambda)), "json char_R " + tag(lambda));
      for (Basis b : {Basis::s, Basis::P, Basis::Q, Basis::S}) o.check(round_trips(to_basis(el(Basis::Q, lambda), b)), "json Q in " + basis_name(b));
    }
  }
  const GpReport r = gp_report(Partition{2, 1});
  o.check(to_json(from_json<GpReport>(to_json(r))).dump() == to_json(r).dump(), "json gp report");
  const SuiteReport s = run_suite("pieri", 2);
  o.check(to_json(from_json<SuiteReport>(to_json(s))).dump() == to_json(s).dump(), "json suite report");

#ifdef SYMQ_HAVE_CLI
  const auto dir = std::filesystem::temp_directory_path() / ("symq_acceptance_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  for (int n = 0; n <= 6; ++n) {
    std::ostringstream out, err;
    const std::vector<std::string> fill = {"--cache-dir", dir.string(), "kostka", "--n", std::to_string(n)};
    o.check(cli::run(fill, out, err) == cli::kOk, "cache fill n=" + std::to_string(n));
    std::ostringstream out2, err2;
    std::vector<std::string> verify = fill;
    verify.push_back("--cache-verify");
    const int code = cli::run(verify, out2, err2);
    o.check(code == cli::kOk && err2.str().find("matches") != std::string::npos, "cache verify n=" + std::to_string(n));
  }
  {
    auto entries = kostka_table(3).entries();
    entries[2][0] += QPoly(1);
    cli::KostkaCache(dir).store(KostkaTable(3, kostka_table(3).labels(), entries));
    std::ostringstream out, err;
    o.check(cli::run({"--cache-dir", dir.string(), "kostka", "--n", "3", "--cache-verify"}, out, err) == cli::kIdentityFailure,
            "cache verify detects a corrupted table");
  }
  std::filesystem::remove_all(dir);
#else
  o.check(false, "cache verify needs the command-line tool");
#endif

  o.check(graded_dimension(Partition{2}) == QPoly(1), "dim R_(2) = 1");
  o.check(graded_dimension(Partition{1, 1}).evaluate(Rational(1)) == Rational(2), "dim R_(1,1) = 2");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "orthogonality n<=6", orthogonality},
      {2, "Kostka routes agree n<=6", kostka_routes},
      {3, "brute-force oracle = char_R", oracle_equivalence},
      {4, "restriction recursion n<=5", gp_restriction},
      {5, "positivity (s.P, coproduct of Q, skew Q)", positivity},
      {6, "big Schur via Molien n<=5, coinvariant form n<=4", big_schur},
      {7, "e1 Pieri coefficients q^a[m]_q, |lambda|<=5", pieri},
      {8, "Frobenius of induction, coproduct multiplicative", hopf},
      {9, "JSON, cache verify, generator convention", infrastructure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failed == 0;
    failed += !pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << "  " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  checks=" << o.checks
              << "  failures=" << o.failed << "  " << timing;
    if (!o.note.empty()) std::cout << "  [" << o.note << "]";
    std::cout << '\n';
    for (const auto& f : o.failures) std::cout << "    failed: " << f << '\n';
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
