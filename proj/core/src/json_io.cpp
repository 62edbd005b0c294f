#include "symq/json_io.hpp"

#include <stdexcept>

namespace symq {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON for " + what); }

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) malformed(what + " (missing \"" + key + "\")");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key, const std::string& what) {
  const Json& a = field(j, key, what);
  if (!a.is_array()) malformed(what + " (\"" + key + "\" is not an array)");
  return a;
}

int int_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer()) malformed(what + " (\"" + key + "\" is not an integer)");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_boolean()) malformed(what + " (\"" + key + "\" is not a boolean)");
  return v.get<bool>();
}

std::string string_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_string()) malformed(what + " (\"" + key + "\" is not a string)");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const Rational& r) { return rational_to_string(r); }

Json to_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"offset", p.offset()}, {"coeffs", coeffs}};
}

Json to_json(const QRat& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return Json{{"basis", basis_name(f.basis())}, {"terms", terms}};
}

Json to_json(const TensorSymFunc& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    terms.push_back({{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", to_json(c)}});
  }
  return Json{{"left", basis_name(t.bases().first)}, {"right", basis_name(t.bases().second)}, {"terms", terms}};
}

Json to_json(const GradedCharacter& gc) {
  Json mult = Json::array();
  for (const auto& [mu, c] : gc.mult) mult.push_back({{"mu", to_json(mu)}, {"coeff", to_json(c)}});
  return Json{{"n", gc.n}, {"mult", mult}};
}

Json to_json(const KostkaTable& t) {
  Json rows = Json::array();
  for (const auto& lambda : t.labels()) {
    Json entries = Json::array();
    for (const auto& mu : t.labels()) entries.push_back({{"mu", to_json(mu)}, {"coeff", to_json(t.at(lambda, mu))}});
    rows.push_back({{"lambda", to_json(lambda)}, {"entries", entries}});
  }
  return Json{{"n", t.n()}, {"rows", rows}};
}

Json to_json(const GpReport& r) {
  return Json{{"lambda", to_json(r.lambda)},
              {"gdim", to_json(r.gdim)},
              {"character", to_json(r.character)},
              {"checks", {{"truncation", r.truncation}, {"rsoc", r.rsoc}, {"ind_triv", r.ind_triv}}}};
}

Json to_json(const CheckFailure& f) {
  return Json{{"identity", f.identity}, {"lambda", to_json(f.lambda)}, {"mu", to_json(f.mu)},
              {"params", f.params},     {"got", f.got},                {"expected", f.expected}};
}

Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  Json j{{"suite", r.suite},
         {"pass", r.pass()},
         {"max_n", r.max_n},
         {"effective_max_n", r.effective_max_n},
         {"checks_run", r.checks_run},
         {"failures", failures},
         {"warnings", r.warnings},
         {"notes", r.notes},
         {"elapsed_ms", r.elapsed_ms}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  return j;
}

template <>
Rational from_json<Rational>(const Json& j) {
  if (!j.is_string()) malformed("rational");
  return rational_from_string(j.get<std::string>());
}

template <>
QPoly from_json<QPoly>(const Json& j) {
  const int offset = int_field(j, "offset", "QPoly");
  std::vector<Rational> coeffs;
  for (const auto& c : array_field(j, "coeffs", "QPoly")) coeffs.push_back(from_json<Rational>(c));
  return QPoly(offset, std::move(coeffs));
}

template <>
QRat from_json<QRat>(const Json& j) {
  QPoly den = from_json<QPoly>(field(j, "den", "QRat"));
  if (den.is_zero()) malformed("QRat (zero denominator)");
  return QRat(from_json<QPoly>(field(j, "num", "QRat")), std::move(den));
}

template <>
Partition from_json<Partition>(const Json& j) {
  if (!j.is_array()) malformed("partition");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) malformed("partition");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

template <>
SymFunc from_json<SymFunc>(const Json& j) {
  SymFunc f(basis_from_name(string_field(j, "basis", "SymFunc")));
  for (const auto& t : array_field(j, "terms", "SymFunc")) {
    f.add_term(from_json<Partition>(field(t, "partition", "SymFunc term")), from_json<QRat>(field(t, "coeff", "SymFunc term")));
  }
  return f;
}

template <>
TensorSymFunc from_json<TensorSymFunc>(const Json& j) {
  TensorSymFunc t(basis_from_name(string_field(j, "left", "TensorSymFunc")),
                  basis_from_name(string_field(j, "right", "TensorSymFunc")));
  for (const auto& term : array_field(j, "terms", "TensorSymFunc")) {
    t.add_term(from_json<Partition>(field(term, "left", "tensor term")), from_json<Partition>(field(term, "right", "tensor term")),
               from_json<QRat>(field(term, "coeff", "tensor term")));
  }
  return t;
}

template <>
GradedCharacter from_json<GradedCharacter>(const Json& j) {
  GradedCharacter gc;
  gc.n = int_field(j, "n", "GradedCharacter");
  for (const auto& m : array_field(j, "mult", "GradedCharacter")) {
    gc.set(from_json<Partition>(field(m, "mu", "GradedCharacter entry")), from_json<QRat>(field(m, "coeff", "GradedCharacter entry")));
  }
  return gc;
}

template <>
KostkaTable from_json<KostkaTable>(const Json& j) {
  const int n = int_field(j, "n", "KostkaTable");
  std::vector<Partition> labels;
  std::vector<std::vector<QPoly>> entries;
  for (const auto& row : array_field(j, "rows", "KostkaTable")) {
    labels.push_back(from_json<Partition>(field(row, "lambda", "KostkaTable row")));
    std::vector<QPoly> values;
    std::vector<Partition> mus;
    for (const auto& e : array_field(row, "entries", "KostkaTable row")) {
      mus.push_back(from_json<Partition>(field(e, "mu", "KostkaTable entry")));
      values.push_back(from_json<QPoly>(field(e, "coeff", "KostkaTable entry")));
    }
    entries.push_back(std::move(values));
    if (mus != partitions_of(n)) malformed("KostkaTable (entries not in canonical order)");
  }
  if (labels != partitions_of(n)) malformed("KostkaTable (rows not in canonical order)");
  return KostkaTable(n, std::move(labels), std::move(entries));
}

template <>
GpReport from_json<GpReport>(const Json& j) {
  GpReport r;
  r.lambda = from_json<Partition>(field(j, "lambda", "GpReport"));
  r.gdim = from_json<QPoly>(field(j, "gdim", "GpReport"));
  r.character = from_json<GradedCharacter>(field(j, "character", "GpReport"));
  const Json& checks = field(j, "checks", "GpReport");
  r.truncation = bool_field(checks, "truncation", "GpReport checks");
  r.rsoc = bool_field(checks, "rsoc", "GpReport checks");
  r.ind_triv = bool_field(checks, "ind_triv", "GpReport checks");
  return r;
}

template <>
CheckFailure from_json<CheckFailure>(const Json& j) {
  return {string_field(j, "identity", "failure"),
          from_json<Partition>(field(j, "lambda", "failure")),
          from_json<Partition>(field(j, "mu", "failure")),
          string_field(j, "params", "failure"),
          string_field(j, "got", "failure"),
          string_field(j, "expected", "failure")};
}

template <>
SuiteReport from_json<SuiteReport>(const Json& j) {
  SuiteReport r;
  r.suite = string_field(j, "suite", "SuiteReport");
  r.max_n = int_field(j, "max_n", "SuiteReport");
  r.effective_max_n = int_field(j, "effective_max_n", "SuiteReport");
  const Json& checks = field(j, "checks_run", "SuiteReport");
  if (!checks.is_number_integer()) malformed("SuiteReport (checks_run)");
  r.checks_run = checks.get<long>();
  for (const auto& f : array_field(j, "failures", "SuiteReport")) r.failures.push_back(from_json<CheckFailure>(f));
  for (const auto& w : array_field(j, "warnings", "SuiteReport")) r.warnings.push_back(w.get<std::string>());
  for (const auto& w : array_field(j, "notes", "SuiteReport")) r.notes.push_back(w.get<std::string>());
  const Json& seed = field(j, "seed", "SuiteReport");
  if (!seed.is_null()) r.seed = seed.get<std::uint64_t>();
  const Json& elapsed = field(j, "elapsed_ms", "SuiteReport");
  if (!elapsed.is_number()) malformed("SuiteReport (elapsed_ms)");
  r.elapsed_ms = elapsed.get<double>();
  return r;
}

}  // namespace symq
