#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "cli.hpp"
#include "expr.hpp"
#include "oracles.hpp"
#include "symq/hl.hpp"
#include "symq/json_io.hpp"

using namespace symq;
using namespace symq::cli;
namespace fs = std::filesystem;

namespace {

const QPoly q = QPoly::q_power(1);
const QPoly one(1);

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t parse_error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

SymFunc value_of(const std::string& text, Basis b) { return to_basis(eval(*parse(text)), b); }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("symq_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST(Parser, ErrorOffsets) {
  EXPECT_EQ(parse_error_offset("s[1,3]"), 4u);
  EXPECT_EQ(parse_error_offset("x[1]"), 0u);
  EXPECT_EQ(parse_error_offset("s[2"), 3u);
  EXPECT_EQ(parse_error_offset(""), 0u);
  EXPECT_EQ(parse_error_offset("   "), 3u);
  EXPECT_EQ(parse_error_offset("s[1]+"), 5u);
  EXPECT_EQ(parse_error_offset("s[0]"), 2u);
  EXPECT_EQ(parse_error_offset("s[1])"), 4u);
  EXPECT_EQ(parse_error_offset("s 1"), 2u);
  EXPECT_EQ(parse_error_offset("s[1] + P[2,1]"), std::string::npos);
  try {
    parse("s[1,3]");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("parse error at byte 4"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("nonincreasing"), std::string::npos);
  }
}

TEST(Evaluator, Examples) {
  EXPECT_EQ(value_of("S[1]", Basis::p), SymFunc::basis_element(Basis::p, Partition{1}, QRat(one - q)));
  EXPECT_EQ(format(value_of("e[1]*P[1]", Basis::P)), "P[2] + (1+q)\xC2\xB7P[1,1]");
  EXPECT_EQ(format(value_of("h[2]", Basis::s)), "s[2]");
  EXPECT_EQ(value_of("2 q^-1 s[1] / q", Basis::s), SymFunc::basis_element(Basis::s, Partition{1}, QRat(Rational(2) * QPoly::q_power(-2))));
  EXPECT_EQ(value_of("-(s[1]) \xC2\xB7 s[1] + s[1,1]", Basis::s), SymFunc::basis_element(Basis::s, Partition{2}, QRat(-1)));
  EXPECT_EQ(value_of("(1-q)/(1-q) s[]", Basis::s), SymFunc::constant(QRat(1), Basis::s));
  EXPECT_THROW(eval(*parse("s[1]/s[1]")), EvalError);
  EXPECT_THROW(eval(*parse("s[1]/(q-q)")), EvalError);
  EXPECT_THROW(eval(*parse("s[8]")), EvalError);
  EXPECT_THROW(eval(*parse("s[4]*s[4]")), EvalError);
  EXPECT_NO_THROW(eval(*parse("s[4]*s[4]"), EvalLimits{8}));
}

TEST(Formatter, Examples) {
  EXPECT_EQ(format(SymFunc(Basis::s)), "0");
  SymFunc f(Basis::Q);
  f.add_term(Partition{2}, QRat(-1));
  f.add_term(Partition{1, 1}, QRat(one, one - q));
  EXPECT_EQ(format(f), "-Q[2] - 1 / (-1+q)\xC2\xB7Q[1,1]");
  EXPECT_EQ(format_coeff(QRat(q, one - q * q)), "-q / (-1+q^2)");
  EXPECT_EQ(format(SymFunc::constant(QRat(one + q), Basis::s)), "(1+q)");
}

TEST(FormatterProperty, ParseInvertsFormat) {
  oracle::Gen gen(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Basis b = static_cast<Basis>(gen.between(0, 7));
    const int n = gen.between(0, 5);
    SymFunc f(b);
    for (int t = 0; t < 3; ++t) f.add_term(gen.partition(n), gen.rat());
    const std::string text = format(f);
    EXPECT_EQ(value_of(text, b), f) << text;
  }
}

TEST(Cache, DirectoryResolution) {
  EXPECT_EQ(resolve_cache_dir(std::string("/x/y")), fs::path("/x/y"));
  ::setenv("SYMQ_CACHE_DIR", "/from/env", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/from/env"));
  EXPECT_EQ(resolve_cache_dir(std::string("/flag")), fs::path("/flag"));
  ::unsetenv("SYMQ_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/xdg", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/xdg/symq"));
  ::unsetenv("XDG_CACHE_HOME");
}

TEST(Cache, StoreLoadAndRejects) {
  TempDir dir;
  const KostkaCache cache(dir.path());
  EXPECT_EQ(cache.file_for(4).filename(), "kostka_n4.json");
  EXPECT_FALSE(cache.load(4).has_value());
  cache.store(kostka_table(4));
  ASSERT_TRUE(cache.load(4).has_value());
  EXPECT_EQ(*cache.load(4), kostka_table(4));
  // a file for another n, another version, or garbage is ignored
  fs::copy_file(cache.file_for(4), cache.file_for(5));
  EXPECT_FALSE(cache.load(5).has_value());
  Json j = Json::parse(std::ifstream(cache.file_for(4)));
  j["format_version"] = kCacheFormatVersion + 1;
  std::ofstream(cache.file_for(4)) << j.dump();
  EXPECT_FALSE(cache.load(4).has_value());
  std::ofstream(cache.file_for(4)) << "{not json";
  EXPECT_FALSE(cache.load(4).has_value());
}

TEST(Command, ExpandAndInner) {
  const CliRun r = run_cli({"--no-cache", "expand", "e[1]*P[1]", "--to", "P"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "P[2] + (1+q)\xC2\xB7P[1,1]\n");
  const CliRun j = run_cli({"expand", "s[2]", "--to", "P", "--json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_EQ(from_json<SymFunc>(Json::parse(j.out)), to_basis(SymFunc::basis_element(Basis::s, Partition{2}), Basis::P));
  const CliRun g = run_cli({"--output", "json", "expand", "s[2]", "--to", "P"});
  EXPECT_EQ(g.out, j.out);
  const CliRun i = run_cli({"inner", "P[2,1]", "Q[2,1]"});
  EXPECT_EQ(i.code, kOk);
  EXPECT_EQ(i.out, "1\n");
  const CliRun z = run_cli({"inner", "P[2]", "Q[1,1]", "--json"});
  EXPECT_EQ(from_json<QRat>(Json::parse(z.out)), QRat(0));
}

TEST(Command, UsageErrors) {
  const CliRun bad = run_cli({"expand", "s[1,3]", "--to", "s"});
  EXPECT_EQ(bad.code, kUsageError);
  EXPECT_NE(bad.err.find("parse error at byte 4"), std::string::npos);
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"expand", "s[1]", "--to", "z"}).code, kUsageError);
  EXPECT_EQ(run_cli({"expand", "s[8]", "--to", "s"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--max-degree", "9", "expand", "s[1]", "--to", "s"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--no-cache", "kostka", "--n", "3", "--method", "lu"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gp", "--partition", "3,3,1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gp", "--partition", "1,2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope", "--max-n", "3"}).code, kUsageError);
  EXPECT_EQ(run_cli({"skew", "--lambda", "1", "--nu", "2"}).code, kUsageError);
  const CliRun warn = run_cli({"--max-degree", "8", "expand", "s[8]", "--to", "s"});
  EXPECT_EQ(warn.code, kOk);
  EXPECT_NE(warn.err.find("warning"), std::string::npos);
}

TEST(Command, KostkaMethodsAgreeAndCacheVerify) {
  TempDir dir;
  const std::string d = dir.path().string();
  const CliRun tri = run_cli({"--cache-dir", d, "kostka", "--n", "4", "--json"});
  ASSERT_EQ(tri.code, kOk);
  EXPECT_EQ(from_json<KostkaTable>(Json::parse(tri.out)), kostka_table(4));
  EXPECT_TRUE(fs::exists(dir.path() / "kostka_n4.json"));
  const CliRun orth = run_cli({"--cache-dir", d, "kostka", "--n", "4", "--method", "orthogonality", "--json"});
  EXPECT_EQ(orth.out, tri.out);
  const CliRun ok = run_cli({"--cache-dir", d, "kostka", "--n", "4", "--cache-verify"});
  EXPECT_EQ(ok.code, kOk);
  EXPECT_NE(ok.err.find("matches"), std::string::npos);

  // tamper with one entry
  auto entries = kostka_table(4).entries();
  entries[1][0] += one;
  KostkaCache(dir.path()).store(KostkaTable(4, kostka_table(4).labels(), entries));
  const CliRun served = run_cli({"--cache-dir", d, "kostka", "--n", "4", "--json"});
  EXPECT_NE(from_json<KostkaTable>(Json::parse(served.out)), kostka_table(4));
  const CliRun caught = run_cli({"--cache-dir", d, "kostka", "--n", "4", "--cache-verify", "--json"});
  EXPECT_EQ(caught.code, kIdentityFailure);
  EXPECT_NE(caught.err.find("differs"), std::string::npos);
  EXPECT_EQ(from_json<KostkaTable>(Json::parse(caught.out)), kostka_table(4));
  // the recomputed table replaced the bad file
  EXPECT_EQ(run_cli({"--cache-dir", d, "kostka", "--n", "4", "--cache-verify"}).code, kOk);
}

TEST(Command, KostkaTableText) {
  const CliRun r = run_cli({"--no-cache", "kostka", "--n", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "lambda \\ mu  [2]  [1,1]\n"
            "[2]          1    0\n"
            "[1,1]        q    1\n");
}

TEST(Command, GpSkewVerify) {
  const CliRun gp = run_cli({"gp", "--partition", "2,1", "--character"});
  EXPECT_EQ(gp.code, kOk);
  EXPECT_NE(gp.out.find("gdim        1+2q"), std::string::npos);
  EXPECT_NE(gp.out.find("ind_triv    ok"), std::string::npos);
  const CliRun gj = run_cli({"gp", "--partition", "2,2", "--json"});
  const Json j = Json::parse(gj.out);
  EXPECT_EQ(from_json<QPoly>(j.at("gdim")), one + Rational(3) * q + Rational(2) * q * q);
  const CliRun sk = run_cli({"skew", "--lambda", "2", "--nu", "1"});
  EXPECT_EQ(sk.code, kOk);
  EXPECT_EQ(sk.out, "S[1]\nS-positive: yes\n");
  const CliRun v = run_cli({"verify", "--suite", "pieri", "--max-n", "3"});
  EXPECT_EQ(v.code, kOk);
  EXPECT_EQ(v.out.rfind("PASS  pieri", 0), 0u);
  const CliRun all = run_cli({"verify", "--suite", "all", "--max-n", "2", "--jobs", "2", "--json"});
  EXPECT_EQ(all.code, kOk);
  const Json reports = Json::parse(all.out);
  ASSERT_TRUE(reports.is_array());
  EXPECT_EQ(reports.size(), suite_names().size());
  for (const auto& r : reports) EXPECT_TRUE(r.at("pass").get<bool>());
}
