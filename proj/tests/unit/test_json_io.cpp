#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symq/json_io.hpp"

using namespace symq;

namespace {

const QPoly q = QPoly::q_power(1);
const QPoly one(1);

template <class T>
void expect_round_trip(const T& value) {
  const Json j = to_json(value);
  const std::string text = j.dump();
  const T back = from_json<T>(Json::parse(text));
  EXPECT_EQ(back, value) << text;
  EXPECT_EQ(to_json(back).dump(), text);
}

}  // namespace

TEST(Json, ScalarForms) {
  EXPECT_EQ(to_json(Rational(3)), Json("3"));
  EXPECT_EQ(to_json(Rational(-3, 2)), Json("-3/2"));
  EXPECT_EQ(to_json(q * q + one).dump(), R"({"coeffs":["1","0","1"],"offset":0})");
  EXPECT_EQ(to_json(QPoly::q_power(-2)).dump(), R"({"coeffs":["1"],"offset":-2})");
  EXPECT_EQ(to_json(Partition{3, 1}).dump(), "[3,1]");
  EXPECT_EQ(to_json(Partition()).dump(), "[]");
  EXPECT_EQ(to_json(QRat(one, one - q)).dump(), R"({"den":{"coeffs":["-1","1"],"offset":0},"num":{"coeffs":["-1"],"offset":0}})");
}

TEST(Json, RoundTripsExamples) {
  expect_round_trip(Rational(-7, 3));
  expect_round_trip(Rational(Integer("123456789012345678901234567890")));
  expect_round_trip(QPoly());
  expect_round_trip(QPoly(-3, {Rational(1, 2), Rational(0), Rational(-4)}));
  expect_round_trip(QRat(q, (one - q) * (one - q * q)));
  expect_round_trip(Partition{4, 2, 2, 1});
  expect_round_trip(to_basis(SymFunc::basis_element(Basis::Q, Partition{2, 1}), Basis::s));
  expect_round_trip(SymFunc(Basis::S));
  expect_round_trip(coproduct(SymFunc::basis_element(Basis::h, Partition{2, 1})));
  expect_round_trip(char_R(Partition{2, 2}));
  for (int n = 0; n <= 5; ++n) expect_round_trip(kostka_table(n));
  expect_round_trip(CheckFailure{"orthogonality", Partition{2}, Partition{1, 1}, "x=1", "q", "0"});
}

TEST(Json, GpReportShape) {
  const GpReport r = gp_report(Partition{2, 1});
  const Json j = to_json(r);
  EXPECT_EQ(j.at("lambda"), Json::array({2, 1}));
  EXPECT_TRUE(j.at("checks").at("truncation").get<bool>());
  EXPECT_TRUE(j.at("checks").at("rsoc").get<bool>());
  EXPECT_TRUE(j.at("checks").at("ind_triv").get<bool>());
  const GpReport back = from_json<GpReport>(j);
  EXPECT_EQ(back.lambda, r.lambda);
  EXPECT_EQ(back.gdim, r.gdim);
  EXPECT_EQ(back.character, r.character);
  EXPECT_EQ(back.pass(), r.pass());
  EXPECT_EQ(to_json(back), j);
}

TEST(Json, SuiteReportRoundTrip) {
  SuiteReport r;
  r.suite = "hopf";
  r.max_n = 9;
  r.effective_max_n = 7;
  r.checks_run = 1234;
  r.failures.push_back({"antipode", Partition{2}, Partition(), "", "s[2]", "0"});
  r.warnings.push_back("max_n 9 capped at 7");
  r.notes.push_back("sampled");
  r.seed = kSuiteSeed;
  r.elapsed_ms = 12.375;
  const Json j = to_json(r);
  EXPECT_FALSE(j.at("pass").get<bool>());
  const SuiteReport back = from_json<SuiteReport>(Json::parse(j.dump()));
  EXPECT_EQ(back.suite, r.suite);
  EXPECT_EQ(back.max_n, r.max_n);
  EXPECT_EQ(back.effective_max_n, r.effective_max_n);
  EXPECT_EQ(back.checks_run, r.checks_run);
  EXPECT_EQ(back.failures, r.failures);
  EXPECT_EQ(back.warnings, r.warnings);
  EXPECT_EQ(back.notes, r.notes);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.elapsed_ms, r.elapsed_ms);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  r.seed.reset();
  EXPECT_TRUE(to_json(r).at("seed").is_null());
  EXPECT_FALSE(from_json<SuiteReport>(to_json(r)).seed.has_value());
}

TEST(JsonProperty, RandomValuesRoundTrip) {
  oracle::Gen gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    expect_round_trip(gen.rational());
    expect_round_trip(gen.poly(5));
    expect_round_trip(gen.rat());
    const int n = gen.between(0, 6);
    expect_round_trip(gen.partition(n));
    SymFunc f(static_cast<Basis>(gen.between(0, 7)));
    for (int t = 0; t < 4; ++t) f.add_term(gen.partition(n), gen.rat());
    expect_round_trip(f);
    GradedCharacter gc;
    gc.n = n;
    gc.set(gen.partition(n), gen.rat());
    expect_round_trip(gc);
  }
}

TEST(Json, MalformedInputIsRejected) {
  EXPECT_THROW(from_json<Rational>(Json(3)), std::invalid_argument);
  EXPECT_THROW(from_json<Rational>(Json("1/0")), std::invalid_argument);
  EXPECT_THROW(from_json<Partition>(Json::parse("[1,2]")), std::invalid_argument);
  EXPECT_THROW(from_json<Partition>(Json::parse("[\"a\"]")), std::invalid_argument);
  EXPECT_THROW(from_json<QPoly>(Json::parse(R"({"offset":0})")), std::invalid_argument);
  EXPECT_THROW(from_json<QRat>(Json::parse(R"({"num":{"offset":0,"coeffs":["1"]},"den":{"offset":0,"coeffs":[]}})")),
               std::invalid_argument);
  EXPECT_THROW(from_json<SymFunc>(Json::parse(R"({"basis":"z","terms":[]})")), std::invalid_argument);
  EXPECT_THROW(from_json<GradedCharacter>(Json::parse(R"({"n":2,"mult":[{"mu":[3],"coeff":{"num":{"offset":0,"coeffs":["1"]},"den":{"offset":0,"coeffs":["1"]}}}]})")),
               std::invalid_argument);
  Json table = to_json(kostka_table(3));
  std::swap(table["rows"][0], table["rows"][1]);
  EXPECT_THROW(from_json<KostkaTable>(table), std::invalid_argument);
}
