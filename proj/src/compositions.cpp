#include "garside/compositions.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace garside {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  bool parenthesised = pos < text.size() && text[pos] == '(';
  if (parenthesised) ++pos;
  while (true) {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("expected a positive integer at offset " + std::to_string(pos));
    }
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 10000) throw std::invalid_argument("part too large");
      ++pos;
    }
    out.push_back(v);
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (parenthesised) {
    if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("expected ')'");
    ++pos;
  }
  skip();
  if (pos != text.size()) throw std::invalid_argument("trailing characters in list");
  return out;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::uint32_t range_mask(int n) {
  return n <= 1 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << (n - 1)) - 1);
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    total_ += p;
  }
}

PartitionN::PartitionN(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be non-increasing");
    }
    total_ += parts_[i];
  }
}

PartitionN PartitionN::sorted(const Composition& c) {
  std::vector<int> parts = c.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return PartitionN(std::move(parts));
}

PartitionN PartitionN::ones(int n) { return PartitionN(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::string to_string(const Composition& c) { return join_parts(c.parts()); }
std::string to_string(const PartitionN& p) { return join_parts(p.parts()); }

Composition parse_composition(std::string_view text) { return Composition(parse_int_list(text)); }
PartitionN parse_partition(std::string_view text) { return PartitionN(parse_int_list(text)); }

Composition composition_of(const DescentSet& set) {
  std::vector<int> parts;
  int previous = 0;
  for (int p = 1; p <= set.n(); ++p) {
    if (p < set.n() && set.contains(p)) continue;
    parts.push_back(p - previous);
    previous = p;
  }
  return Composition(std::move(parts));
}

PartitionN partition_of(const DescentSet& set) { return PartitionN::sorted(composition_of(set)); }

DescentSet set_of_composition(const Composition& c) {
  const int n = c.n();
  std::uint32_t bits = range_mask(n);
  int partial = 0;
  for (std::size_t i = 0; i + 1 < c.length(); ++i) {
    partial += c.parts()[i];
    bits &= ~(std::uint32_t{1} << (partial - 1));
  }
  return DescentSet(n, bits);
}

DescentSet set_of_partition(const PartitionN& p) { return set_of_composition(p.as_composition()); }

PartitionOrder::PartitionOrder(int n) : n_(n) {
  if (n < 1 || n > 17) throw std::invalid_argument("partition order supports 1 <= n <= 17");
  const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
  mask_index_.resize(subsets);
  std::map<PartitionN, std::uint16_t> seen;
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    PartitionN p = partition_of(DescentSet(n, bits));
    auto [it, inserted] = seen.try_emplace(p, static_cast<std::uint16_t>(partitions_.size()));
    if (inserted) partitions_.push_back(p);
    mask_index_[bits] = it->second;
  }
}

std::size_t PartitionOrder::index_of(const PartitionN& p) const {
  if (p.n() != n_) throw std::invalid_argument("partition " + to_string(p) + " is not a partition of " +
                                               std::to_string(n_));
  return index_of_mask(set_of_partition(p).bits());
}

std::vector<PartitionN> partitions_in_order(int n) { return PartitionOrder(n).partitions(); }

Integer partition_count(int n) {
  if (n < 0) return Integer(0);
  // Coin-change recurrence over part sizes.
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) {
      ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

Integer multinomial(const std::vector<int>& parts) {
  unsigned total = 0;
  for (int p : parts) total += static_cast<unsigned>(p);
  Integer out = factorial(total);
  for (int p : parts) out /= factorial(static_cast<unsigned>(p));
  return out;
}

Integer contingency_count(const Composition& rows, const Composition& cols) {
  if (rows.n() != cols.n()) throw std::invalid_argument("contingency margins have different totals");
  // Column-by-column dynamic programme keyed on the remaining row sums.
  std::map<std::vector<int>, Integer> states{{rows.parts(), Integer(1)}};
  for (int column_sum : cols.parts()) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [remaining, ways] : states) {
      std::vector<int> after = remaining;
      std::function<void(std::size_t, int)> fill = [&](std::size_t row, int left) {
        if (row + 1 == after.size()) {
          if (left > remaining[row]) return;
          after[row] = remaining[row] - left;
          next[after] += ways;
          after[row] = remaining[row];
          return;
        }
        for (int take = 0; take <= std::min(left, remaining[row]); ++take) {
          after[row] = remaining[row] - take;
          fill(row + 1, left - take);
        }
        after[row] = remaining[row];
      };
      fill(0, column_sum);
    }
    states = std::move(next);
  }
  Integer total;
  for (const auto& [remaining, ways] : states) total += ways;
  return total;
}

Integer a_hat(const DescentSet& I, const DescentSet& J) {
  if (I.n() != J.n()) throw std::invalid_argument("descent sets over different strand counts");
  return contingency_count(composition_of(I), composition_of(J));
}

Integer a(const DescentSet& I, const DescentSet& J) {
  if (I.n() != J.n()) throw std::invalid_argument("descent sets over different strand counts");
  const std::uint32_t free = ~I.bits() & range_mask(I.n());
  Integer total;
  // Walk every submask K of the complement of I.
  std::uint32_t k = free;
  while (true) {
    Integer term = a_hat(DescentSet(I.n(), I.bits() | k), J);
    if (std::popcount(k) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    if (k == 0) break;
    k = (k - 1) & free;
  }
  return total;
}

Integer count_functions(const DescentSet& I, const DescentSet& J, bool exact) {
  if (I.n() != J.n()) throw std::invalid_argument("descent sets over different strand counts");
  const int n = I.n();
  const Composition fibres = composition_of(J);
  std::vector<int> f;
  f.reserve(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < fibres.length(); ++j) {
    f.insert(f.end(), static_cast<std::size_t>(fibres.parts()[j]), static_cast<int>(j + 1));
  }
  Integer count;
  do {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      const bool weak_descent = f[static_cast<std::size_t>(i - 1)] >= f[static_cast<std::size_t>(i)];
      ok = exact ? (I.contains(i) == weak_descent) : (!I.contains(i) || weak_descent);
    }
    if (ok) ++count;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

std::vector<Integer> a_column(const DescentSet& J) {
  const int n = J.n();
  const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
  const Composition cols = composition_of(J);
  // Contingency counts are symmetric under reordering the margins.
  std::map<std::vector<int>, Integer> by_margin;
  std::vector<Integer> values(subsets);
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    const Composition rows = composition_of(DescentSet(n, bits));
    std::vector<int> key = rows.parts();
    std::sort(key.begin(), key.end());
    auto it = by_margin.find(key);
    if (it == by_margin.end()) it = by_margin.emplace(key, contingency_count(rows, cols)).first;
    values[bits] = it->second;
  }
  for (std::uint32_t bit = 1; bit < subsets; bit <<= 1) {
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
      if ((bits & bit) == 0) values[bits] -= values[bits | bit];
    }
  }
  return values;
}

}  // namespace garside
