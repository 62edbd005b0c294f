#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cache.hpp"
#include "expr.hpp"
#include "symq/gporacle.hpp"
#include "symq/hl.hpp"
#include "symq/json_io.hpp"
#include "symq/symfunc.hpp"
#include "symq/verify.hpp"

namespace symq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::string output = "table";
  int max_degree = kDefaultSymbolicBound;
  int oracle_max_n = kDefaultOracleBound;
};

struct Context {
  Globals g;
  std::ostream& out;
  std::ostream& err;

  bool json(bool local_flag) const { return local_flag || g.output == "json"; }
};

Partition parse_partition_arg(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
    cleaned += c;
  }
  try {
    return Partition::parse(cleaned);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid partition '") + text + "': " + e.what());
  }
}

SymFunc parse_and_eval(const std::string& text, const Context& ctx) {
  try {
    return eval(*parse(text), EvalLimits{ctx.g.max_degree});
  } catch (const ParseError& e) {
    std::string marker(e.offset(), ' ');
    throw UsageError(std::string(e.what()) + "\n  " + text + "\n  " + marker + "^");
  } catch (const EvalError& e) {
    throw UsageError(e.what());
  }
}

void check_symbolic_degree(int n, const Context& ctx, const std::string& what) {
  if (n > ctx.g.max_degree) {
    throw UsageError(what + " " + std::to_string(n) + " exceeds the degree bound " + std::to_string(ctx.g.max_degree) +
                     " (raise it with --max-degree)");
  }
}

std::string bracketed(const Partition& p) { return "[" + p.to_string() + "]"; }

// expand

int cmd_expand(const Context& ctx, const std::string& expr_text, const std::string& to, bool json_flag) {
  Basis target;
  try {
    target = basis_from_name(to);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown basis '" + to + "' (expected one of m e h s p P Q S)");
  }
  const SymFunc value = to_basis(parse_and_eval(expr_text, ctx), target);
  if (ctx.json(json_flag)) {
    ctx.out << to_json(value).dump(2) << '\n';
  } else {
    ctx.out << format(value) << '\n';
  }
  return kOk;
}

// inner

int cmd_inner(const Context& ctx, const std::string& a, const std::string& b, bool json_flag) {
  const QRat v = hall_inner(parse_and_eval(a, ctx), parse_and_eval(b, ctx));
  if (ctx.json(json_flag)) {
    ctx.out << to_json(v).dump(2) << '\n';
  } else {
    ctx.out << format_coeff(v) << '\n';
  }
  return kOk;
}

// kostka

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
    }
    out << s << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

int cmd_kostka(const Context& ctx, int n, const std::string& method, bool json_flag, bool cache_verify) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  check_symbolic_degree(n, ctx, "--n");
  if (method != "triangular" && method != "orthogonality") {
    throw UsageError("unknown method '" + method + "' (expected triangular or orthogonality)");
  }

  std::optional<KostkaCache> cache;
  if (!ctx.g.no_cache) {
    const auto dir = resolve_cache_dir(ctx.g.cache_dir);
    if (!dir.empty()) cache.emplace(dir);
  }

  KostkaTable table;
  int status = kOk;
  if (method == "orthogonality") {
    table = kostka_orthogonality(n);
  } else {
    std::optional<KostkaTable> cached = cache ? cache->load(n) : std::nullopt;
    if (cache_verify) {
      table = kostka_triangular(n);
      if (!cache) {
        ctx.err << "cache-verify: caching is disabled\n";
      } else if (!cached) {
        ctx.err << "cache-verify: no cached table for n = " << n << "\n";
      } else if (*cached == table) {
        ctx.err << "cache-verify: " << cache->file_for(n).string() << " matches\n";
      } else {
        ctx.err << "cache-verify: " << cache->file_for(n).string() << " differs from the recomputed table\n";
        status = kIdentityFailure;
      }
    } else if (cached) {
      table = *cached;
    } else {
      table = kostka_table(n);
    }
    if (cache && (!cached || status != kOk)) {
      try {
        cache->store(table);
      } catch (const std::exception& e) {
        ctx.err << "warning: " << e.what() << '\n';
      }
    }
  }

  if (ctx.json(json_flag)) {
    ctx.out << to_json(table).dump(2) << '\n';
    return status;
  }
  std::vector<std::string> header{"lambda \\ mu"};
  for (const auto& mu : table.labels()) header.push_back(bracketed(mu));
  std::vector<std::vector<std::string>> rows;
  for (const auto& lambda : table.labels()) {
    std::vector<std::string> row{bracketed(lambda)};
    for (const auto& mu : table.labels()) row.push_back(table.at(lambda, mu).to_string());
    rows.push_back(std::move(row));
  }
  print_table(ctx.out, header, rows);
  return status;
}

// gp

int cmd_gp(const Context& ctx, const std::string& partition_text, bool character, bool json_flag) {
  const Partition lambda = parse_partition_arg(partition_text);
  if (lambda.size() > ctx.g.oracle_max_n) {
    throw UsageError("|lambda| = " + std::to_string(lambda.size()) + " exceeds the oracle bound " +
                     std::to_string(ctx.g.oracle_max_n) + " (raise it with --oracle-max-n)");
  }
  const GpReport r = gp_report(lambda);
  const int status = r.pass() ? kOk : kIdentityFailure;
  if (ctx.json(json_flag)) {
    ctx.out << to_json(r).dump(2) << '\n';
    return status;
  }
  auto verdict = [](bool ok) { return ok ? "ok" : "FAILED"; };
  ctx.out << "lambda      " << bracketed(lambda) << '\n';
  ctx.out << "gdim        " << r.gdim.to_string() << '\n';
  ctx.out << "truncation  " << verdict(r.truncation) << '\n';
  ctx.out << "rsoc        " << verdict(r.rsoc) << '\n';
  ctx.out << "ind_triv    " << verdict(r.ind_triv) << '\n';
  if (character) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& mu : partitions_of(lambda.size())) rows.push_back({bracketed(mu), format_coeff(r.character.at(mu))});
    print_table(ctx.out, {"mu", "[R_lambda : L_mu]_q"}, rows);
  }
  return status;
}

// skew

int cmd_skew(const Context& ctx, const std::string& lambda_text, const std::string& nu_text, bool json_flag) {
  const Partition lambda = parse_partition_arg(lambda_text);
  const Partition nu = parse_partition_arg(nu_text);
  check_symbolic_degree(lambda.size(), ctx, "|lambda|");
  if (nu.size() > lambda.size()) throw UsageError("|nu| exceeds |lambda|");
  const SymFunc sk = to_basis(skew_Q(lambda, nu), Basis::S);
  bool positive = true;
  for (const auto& [gamma, c] : sk.terms()) {
    positive = positive && c.is_polynomial() && c.as_poly().has_integer_coeffs() && c.as_poly().is_nonneg();
  }
  if (ctx.json(json_flag)) {
    const Json j{{"lambda", to_json(lambda)}, {"nu", to_json(nu)}, {"expansion", to_json(sk)}, {"s_positive", positive}};
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << format(sk) << '\n';
    ctx.out << "S-positive: " << (positive ? "yes" : "no") << '\n';
  }
  return positive ? kOk : kIdentityFailure;
}

// verify

void print_report(std::ostream& out, const SuiteReport& r) {
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(1) << r.elapsed_ms;
  out << (r.pass() ? "PASS  " : "FAIL  ") << std::left << std::setw(15) << r.suite << std::right
      << "  max_n=" << r.effective_max_n << "  checks=" << r.checks_run << "  failures=" << r.failures.size()
      << "  " << ms.str() << " ms";
  if (r.seed) out << "  seed=" << *r.seed;
  out << '\n';
  for (const auto& w : r.warnings) out << "  warning: " << w << '\n';
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  for (const auto& f : r.failures) {
    out << "  " << f.identity << "  lambda=" << bracketed(f.lambda) << "  mu=" << bracketed(f.mu);
    if (!f.params.empty()) out << "  " << f.params;
    out << "  got=" << f.got << "  expected=" << f.expected << '\n';
  }
}

int cmd_verify(const Context& ctx, const std::string& suite, int max_n, int jobs, bool json_flag) {
  if (max_n < 0) throw UsageError("--max-n must be nonnegative");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = run_all(max_n, jobs);
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw UsageError("unknown suite '" + suite + "' (known: " + known + ", all)");
    }
    reports.push_back(run_suite(suite, max_n, jobs));
  }
  bool pass = true;
  for (const auto& r : reports) {
    pass = pass && r.pass();
    for (const auto& w : r.warnings) ctx.err << "warning: " << r.suite << ": " << w << '\n';
  }
  if (ctx.json(json_flag)) {
    if (suite == "all") {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      ctx.out << arr.dump(2) << '\n';
    } else {
      ctx.out << to_json(reports.front()).dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) print_report(ctx.out, r);
  }
  return pass ? kOk : kIdentityFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetric functions over Q(q): Hall-Littlewood functions, graded Kostka tables, Garsia-Procesi modules",
               "symq"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "Kostka table cache directory (overrides SYMQ_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the cache");
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-degree", g.max_degree, "Degree bound for symbolic computations")->check(CLI::Range(0, kMaxHlDegree));
  app.add_option("--oracle-max-n", g.oracle_max_n, "Size bound for oracle runs")->check(CLI::Range(0, kMaxOracleN));

  std::string expr_a, expr_b, to, method = "triangular", partition, lambda, nu, suite;
  bool json_flag = false, character = false, cache_verify = false;
  int n = 0, max_n = 0, jobs = 1;

  auto* expand = app.add_subcommand("expand", "Expand an expression in a basis");
  expand->add_option("expr", expr_a, "Expression, e.g. \"e[1]*P[1]\"")->required();
  expand->add_option("--to", to, "Target basis: m e h s p P Q S")->required();
  expand->add_flag("--json", json_flag, "JSON output");

  auto* inner = app.add_subcommand("inner", "Hall inner product of two expressions");
  inner->add_option("lhs", expr_a)->required();
  inner->add_option("rhs", expr_b)->required();
  inner->add_flag("--json", json_flag, "JSON output");

  auto* kostka = app.add_subcommand("kostka", "Graded Kostka table [K_lambda : L_mu]_q");
  kostka->add_option("--n", n, "Degree")->required();
  kostka->add_option("--method", method, "triangular or orthogonality");
  kostka->add_flag("--json", json_flag, "JSON output");
  kostka->add_flag("--cache-verify", cache_verify, "Recompute and compare with the cached table");

  auto* gp = app.add_subcommand("gp", "Garsia-Procesi module by brute force");
  gp->add_option("--partition", partition, "Partition, e.g. 2,1")->required();
  gp->add_flag("--character", character, "Print the graded character");
  gp->add_flag("--json", json_flag, "JSON output");

  auto* skew = app.add_subcommand("skew", "Skew Q_{lambda/nu} in the big Schur basis");
  skew->add_option("--lambda", lambda)->required();
  skew->add_option("--nu", nu)->required();
  skew->add_flag("--json", json_flag, "JSON output");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name or all")->required();
  verify->add_option("--max-n", max_n, "Largest degree")->required();
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_flag("--json", json_flag, "JSON output");

  std::vector<std::string> argv_storage{"symq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (g.max_degree > kDefaultSymbolicBound) {
    err << "warning: --max-degree " << g.max_degree << " is above the default " << kDefaultSymbolicBound
        << "; expect long runs\n";
  }
  if (g.oracle_max_n > kDefaultOracleBound) {
    err << "warning: --oracle-max-n " << g.oracle_max_n << " is above the default " << kDefaultOracleBound
        << "; expect long runs\n";
  }

  Context ctx{g, out, err};
  try {
    if (*expand) return cmd_expand(ctx, expr_a, to, json_flag);
    if (*inner) return cmd_inner(ctx, expr_a, expr_b, json_flag);
    if (*kostka) return cmd_kostka(ctx, n, method, json_flag, cache_verify);
    if (*gp) return cmd_gp(ctx, partition, character, json_flag);
    if (*skew) return cmd_skew(ctx, lambda, nu, json_flag);
    if (*verify) return cmd_verify(ctx, suite, max_n, jobs, json_flag);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kIdentityFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace symq::cli
