#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>

#include "garside/compositions.hpp"
#include "garside/integer.hpp"
#include "garside/permutation.hpp"

namespace garside {

/// Constraint on the last factor of a normal sequence: none, an exact
/// permutation, or the partition of its left descents.
using LastFactor = std::variant<std::monostate, Permutation, PartitionN>;

bool accepts(const LastFactor& constraint, const Permutation& x);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBruteBudget = 100'000'000;

/// Counts d-tuples of simples with every adjacent pair normal by enumerating
/// all (n!)^d tuples. Throws BudgetExceeded when (n!)^d > budget.
Integer brute_count(int n, int d, const LastFactor& constraint = {}, std::uint64_t budget = kDefaultBruteBudget);

inline constexpr int kDpMaxStrands = 7;

/// Same count by a transfer over all n! simples, one state per simple.
/// Throws CapExceeded (from incidence.hpp) above max_n.
Integer dp_count(int n, int d, const LastFactor& constraint = {}, int max_n = kDpMaxStrands);

}  // namespace garside
