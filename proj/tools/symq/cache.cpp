#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>

#include "symq/json_io.hpp"

namespace symq::cli {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (auto v = env("SYMQ_CACHE_DIR")) return *v;
  if (auto v = env("XDG_CACHE_HOME")) return fs::path(*v) / "symq";
  if (auto v = env("HOME")) return fs::path(*v) / ".cache" / "symq";
  return {};
}

fs::path KostkaCache::file_for(int n) const { return dir_ / ("kostka_n" + std::to_string(n) + ".json"); }

std::optional<KostkaTable> KostkaCache::load(int n) const {
  std::ifstream in(file_for(n));
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.value("format_version", -1) != kCacheFormatVersion || j.value("kind", "") != "kostka") return std::nullopt;
    KostkaTable t = from_json<KostkaTable>(j.at("table"));
    if (t.n() != n) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void KostkaCache::store(const KostkaTable& table) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());

  const Json j{{"format_version", kCacheFormatVersion}, {"kind", "kostka"}, {"table", to_json(table)}};
  const fs::path target = file_for(table.n());
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move cache file into place: " + target.string());
  }
}

}  // namespace symq::cli
