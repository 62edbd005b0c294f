#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "symq/qcoeff.hpp"

namespace symq {

/// Integer partition: a nonincreasing sequence of positive parts.
///
/// The total order is the canonical one used everywhere for map keys and
/// output: by size, then reverse-lexicographic (so (n) comes first among
/// partitions of n). Within one size this is a linear extension of
/// dominance, largest first.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zero parts; negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);
  /// Text form "3,1,1"; "" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 1-based part access, 0 beyond the length.
  int part(int i) const;
  /// m_i: number of parts equal to i.
  int multiplicity(int i) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& lambda);

/// lambda <= mu in dominance; false for different sizes.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// n(lambda) = sum (i-1) lambda_i
int n_stat(const Partition& lambda);

/// b_lambda(q) = prod_j (1-q)...(1-q^{m_j})
QPoly b_poly(const Partition& lambda);

/// lambda^{(j)}: add one to the j-th part (1 <= j <= length+1), re-sorted.
Partition add_box(const Partition& lambda, int j);

/// lambda_{(j)}: subtract one from the j-th part (1 <= j <= length), re-sorted.
Partition remove_box(const Partition& lambda, int j);

/// All partitions of n in canonical order, starting with (n).
std::vector<Partition> partitions_of(int n);

/// prod_i i^{m_i} m_i!, the centralizer order of a permutation of this cycle type.
std::uint64_t z_stat(const Partition& lambda);

/// n! / prod lambda_i!, the dimension of the permutation module on S_n / S_lambda.
std::uint64_t multinomial(const Partition& lambda);

std::uint64_t factorial(int n);

}  // namespace symq

template <>
struct std::hash<symq::Partition> {
  std::size_t operator()(const symq::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
