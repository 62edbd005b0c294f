#pragma once

// JSON forms of the library's value types. Every from_json inverts the
// matching to_json exactly; malformed input throws std::invalid_argument.

#include <nlohmann/json.hpp>

#include "symq/gporacle.hpp"
#include "symq/hl.hpp"
#include "symq/verify.hpp"

namespace symq {

using Json = nlohmann::json;

/// "a/b", with "/b" omitted when b = 1
Json to_json(const Rational& r);
/// {"offset": int, "coeffs": ["a/b", ...]}
Json to_json(const QPoly& p);
/// {"num": QPoly, "den": QPoly}
Json to_json(const QRat& r);
/// [3,1,1]
Json to_json(const Partition& p);
/// {"basis": "s", "terms": [{"partition": [...], "coeff": QRat}, ...]}
Json to_json(const SymFunc& f);
/// {"left": basis, "right": basis, "terms": [{"left": [...], "right": [...], "coeff": QRat}, ...]}
Json to_json(const TensorSymFunc& t);
/// {"n": n, "mult": [{"mu": [...], "coeff": QRat}, ...]}
Json to_json(const GradedCharacter& gc);
/// {"n": n, "rows": [{"lambda": [...], "entries": [{"mu": [...], "coeff": QPoly}, ...]}, ...]}
Json to_json(const KostkaTable& t);
/// {"lambda": [...], "gdim": QPoly, "character": GradedCharacter,
///  "checks": {"truncation": bool, "rsoc": bool, "ind_triv": bool}}
Json to_json(const GpReport& r);
Json to_json(const CheckFailure& f);
Json to_json(const SuiteReport& r);

template <class T>
T from_json(const Json& j);

template <> Rational from_json<Rational>(const Json& j);
template <> QPoly from_json<QPoly>(const Json& j);
template <> QRat from_json<QRat>(const Json& j);
template <> Partition from_json<Partition>(const Json& j);
template <> SymFunc from_json<SymFunc>(const Json& j);
template <> TensorSymFunc from_json<TensorSymFunc>(const Json& j);
template <> GradedCharacter from_json<GradedCharacter>(const Json& j);
template <> KostkaTable from_json<KostkaTable>(const Json& j);
template <> GpReport from_json<GpReport>(const Json& j);
template <> CheckFailure from_json<CheckFailure>(const Json& j);
template <> SuiteReport from_json<SuiteReport>(const Json& j);

}  // namespace symq
