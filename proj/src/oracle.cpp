#include "garside/oracle.hpp"

#include <thread>

#include "garside/incidence.hpp"

namespace garside {

bool accepts(const LastFactor& constraint, const Permutation& x) {
  if (const auto* p = std::get_if<Permutation>(&constraint)) return *p == x;
  if (const auto* lambda = std::get_if<PartitionN>(&constraint)) return partition_of(d_left(x)) == *lambda;
  return true;
}

namespace {

void check_constraint(int n, const LastFactor& constraint) {
  if (const auto* p = std::get_if<Permutation>(&constraint); p && p->n() != n) {
    throw std::invalid_argument("last factor has the wrong strand count");
  }
  if (const auto* lambda = std::get_if<PartitionN>(&constraint); lambda && lambda->n() != n) {
    throw std::invalid_argument("last-factor partition has the wrong total");
  }
}

}  // namespace

Integer brute_count(int n, int d, const LastFactor& constraint, std::uint64_t budget) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  check_constraint(n, constraint);
  const auto simples = simple_enumeration(n);
  const std::uint64_t size = simples.size();
  std::uint64_t total = 1;
  for (int k = 0; k < d; ++k) {
    if (total > budget / size) throw BudgetExceeded("(n!)^d exceeds the enumeration budget");
    total *= size;
  }

  // One odometer per first factor; workers take first factors round-robin.
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(size));
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::vector<std::size_t> digits(static_cast<std::size_t>(d), 0);
        for (std::size_t first = w; first < size; first += workers) {
          digits.assign(digits.size(), 0);
          digits[0] = first;
          while (true) {
            bool ok = accepts(constraint, simples[digits.back()]);
            for (std::size_t k = 0; ok && k + 1 < digits.size(); ++k) {
              ok = is_normal_pair(simples[digits[k]], simples[digits[k + 1]]);
            }
            if (ok) ++partial[w];
            std::size_t k = digits.size();
            while (k > 1 && ++digits[k - 1] == size) digits[--k] = 0;
            if (k == 1) break;
          }
        }
      });
    }
  }
  Integer count = 0;
  for (auto c : partial) count += Integer(static_cast<unsigned long>(c));
  return count;
}

Integer dp_count(int n, int d, const LastFactor& constraint, int max_n) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  if (n > max_n) throw CapExceeded("dp oracle is capped at n = " + std::to_string(max_n));
  check_constraint(n, constraint);
  const auto simples = simple_enumeration(n);
  const std::size_t size = simples.size();
  std::vector<std::uint32_t> left(size), right(size);
  for (std::size_t k = 0; k < size; ++k) {
    left[k] = d_left(simples[k]).bits();
    right[k] = d_right(simples[k]).bits();
  }
  std::vector<Integer> ending(size, Integer(1));
  for (int step = 1; step < d; ++step) {
    std::vector<Integer> next(size);
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t x = 0; x < size; ++x) {
        if ((left[y] & ~right[x]) == 0) next[y] += ending[x];
      }
    }
    ending = std::move(next);
  }
  Integer count = 0;
  for (std::size_t y = 0; y < size; ++y) {
    if (accepts(constraint, simples[y])) count += ending[y];
  }
  return count;
}

}  // namespace garside
