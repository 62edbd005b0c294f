#include "symq/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace symq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be nonincreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw std::invalid_argument("negative part");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  // Reverse lexicographic: the lexicographically larger partition sorts first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return Partition();
  out.reserve(static_cast<std::size_t>(lambda.part(1)));
  for (int j = 1; j <= lambda.part(1); ++j) {
    int count = 0;
    for (int x : lambda.parts()) count += (x >= j);
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int a = 0, b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int k = 1; k <= len; ++k) {
    a += lambda.part(k);
    b += mu.part(k);
    if (a > b) return false;
  }
  return true;
}

int n_stat(const Partition& lambda) {
  int total = 0;
  for (int i = 1; i <= lambda.length(); ++i) total += (i - 1) * lambda.part(i);
  return total;
}

QPoly b_poly(const Partition& lambda) {
  QPoly out(1);
  if (lambda.empty()) return out;
  for (int j = 1; j <= lambda.part(1); ++j) out *= q_pochhammer(lambda.multiplicity(j));
  return out;
}

Partition add_box(const Partition& lambda, int j) {
  if (j < 1 || j > lambda.length() + 1) throw std::out_of_range("add_box: position out of range");
  std::vector<int> parts = lambda.parts();
  if (j == lambda.length() + 1) {
    parts.push_back(1);
  } else {
    parts[static_cast<std::size_t>(j - 1)] += 1;
  }
  return Partition::from_unsorted(std::move(parts));
}

Partition remove_box(const Partition& lambda, int j) {
  if (j < 1 || j > lambda.length()) throw std::out_of_range("remove_box: position out of range");
  std::vector<int> parts = lambda.parts();
  parts[static_cast<std::size_t>(j - 1)] -= 1;
  return Partition::from_unsorted(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(n, n, cur, out);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t z_stat(const Partition& lambda) {
  std::uint64_t z = 1;
  if (lambda.empty()) return z;
  for (int i = 1; i <= lambda.part(1); ++i) {
    const int m = lambda.multiplicity(i);
    for (int k = 0; k < m; ++k) z *= static_cast<std::uint64_t>(i);
    z *= factorial(m);
  }
  return z;
}

std::uint64_t multinomial(const Partition& lambda) {
  std::uint64_t r = factorial(lambda.size());
  for (int x : lambda.parts()) r /= factorial(x);
  return r;
}

}  // namespace symq
