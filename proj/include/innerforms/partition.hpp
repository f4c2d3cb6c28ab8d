#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace innerforms {

/// A finite nonincreasing sequence of positive integers. Every constructor
/// normalizes (sorts descending, drops zeros), so equality is structural.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Throws Error(InvalidArgument) on a negative part.
  static Partition from_parts(std::vector<int> parts);

  /// The all-ones partition (1, ..., 1) of n.
  static Partition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // |λ|
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool all_ones() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition transpose(const Partition& lambda);

/// e × λ: each part repeated e times.
Partition times(int e, const Partition& lambda);

/// e · λ: each part multiplied by e.
Partition dot(int e, const Partition& lambda);

/// e |× λ: every distinct part occurs with multiplicity divisible by e.
bool divides_times(int e, const Partition& lambda);

/// e |· λ: every part divisible by e.
bool divides_dot(int e, const Partition& lambda);

/// Inverse of times(e, ·); requires divides_times(e, λ).
Partition divide_times(int e, const Partition& lambda);

/// Partial-sum dominance with zero padding; total on partitions of unequal size.
bool dominance_leq(const Partition& lhs, const Partition& rhs);

/// (λ_1^t, ..., λ_k^t)^t, i.e. the columnwise sum of the Young diagrams.
Partition concat_transpose(std::span<const Partition> lambdas);

/// All partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int n);

long partition_count(int n);

/// (value, multiplicity) pairs in increasing value order.
std::vector<std::pair<int, int>> multiplicities(const Partition& lambda);

}  // namespace innerforms
