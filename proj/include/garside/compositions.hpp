#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "garside/integer.hpp"
#include "garside/permutation.hpp"

namespace garside {

/// An ordered sequence of positive parts summing to n.
class Composition {
 public:
  /// Throws std::invalid_argument on an empty list or a non-positive part.
  explicit Composition(std::vector<int> parts);

  int n() const { return total_; }
  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// A non-increasing sequence of positive parts summing to n.
class PartitionN {
 public:
  /// Throws std::invalid_argument unless the parts are positive and non-increasing.
  explicit PartitionN(std::vector<int> parts);
  /// The non-increasing rearrangement of a composition.
  static PartitionN sorted(const Composition& c);
  /// (1, 1, ..., 1)
  static PartitionN ones(int n);

  int n() const { return total_; }
  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  Composition as_composition() const { return Composition(parts_); }

  bool operator==(const PartitionN&) const = default;
  auto operator<=>(const PartitionN&) const = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Parenthesised list, e.g. "(3,4,1,2)".
std::string to_string(const Composition& c);
std::string to_string(const PartitionN& p);
/// Accepts "(3,4,1,2)" or "3,4,1,2"; throws std::invalid_argument.
Composition parse_composition(std::string_view text);
PartitionN parse_partition(std::string_view text);

/// Gap sequence of [1, n] \ I: with p_1 < ... < p_k the complement, returns
/// (p_1, p_2 - p_1, ..., p_k - p_{k-1}).
Composition composition_of(const DescentSet& set);
PartitionN partition_of(const DescentSet& set);
/// The unique I with composition_of(I) == c.
DescentSet set_of_composition(const Composition& c);
DescentSet set_of_partition(const PartitionN& p);

/// Partitions of n, ordered by the first subset of [1, n-1] (in binary-counting
/// order) whose partition they are, together with a lookup from subset masks.
class PartitionOrder {
 public:
  explicit PartitionOrder(int n);

  int n() const { return n_; }
  std::size_t size() const { return partitions_.size(); }
  const std::vector<PartitionN>& partitions() const { return partitions_; }
  const PartitionN& operator[](std::size_t i) const { return partitions_[i]; }
  /// Index of partition_of(I) for I given by its bit mask.
  std::size_t index_of_mask(std::uint32_t bits) const { return mask_index_[bits]; }
  /// Throws std::invalid_argument for a partition of a different n.
  std::size_t index_of(const PartitionN& p) const;

 private:
  int n_;
  std::vector<PartitionN> partitions_;
  std::vector<std::uint16_t> mask_index_;
};

std::vector<PartitionN> partitions_in_order(int n);

/// p(n), the number of partitions of n (p(0) = 1).
Integer partition_count(int n);

/// n! / (p_1! ... p_k!)
Integer multinomial(const std::vector<int>& parts);

/// Number of non-negative integer matrices with the given row and column sums.
/// Throws std::invalid_argument when the margins have different totals.
Integer contingency_count(const Composition& rows, const Composition& cols);

/// Number of simples x with d_left(x) containing I and d_right(x) containing J.
Integer a_hat(const DescentSet& I, const DescentSet& J);
/// Number of simples x with d_left(x) equal to I and d_right(x) containing J,
/// by inclusion-exclusion over K disjoint from I.
Integer a(const DescentSet& I, const DescentSet& J);

/// Direct enumeration of the maps f : [1,n] -> [1,l] whose fibres have the sizes
/// of composition_of(J), and with i in I <=> f(i) >= f(i+1) (exact) or
/// i in I => f(i) >= f(i+1) (relaxed).
Integer count_functions(const DescentSet& I, const DescentSet& J, bool exact);

/// a(I, J) for every I (indexed by mask) at a fixed J, by Moebius inversion over
/// supersets of the contingency counts.
std::vector<Integer> a_column(const DescentSet& J);

}  // namespace garside
