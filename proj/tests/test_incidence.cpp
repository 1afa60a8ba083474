#include <cstdlib>
#include <map>

#include "doctest.h"
#include "garside/incidence.hpp"
#include "support/oracles.hpp"

using namespace garside;

namespace {

using Rows = std::vector<std::vector<long long>>;

Rows rows_of(const NormalityMatrix& m) { return m.to_count_matrix().to_rows(); }

// (1,...,1) M^{d-1} for d = 1 .. dmax, through any matrix type with row_times.
template <class Matrix>
std::vector<CountVector> orbit(const Matrix& m, int dmax) {
  std::vector<CountVector> out{CountVector(m.size(), Integer(1))};
  while (static_cast<int>(out.size()) < dmax) out.push_back(row_times(out.back(), m));
  return out;
}

}  // namespace

TEST_CASE("normality matrices") {
  CHECK(rows_of(build_M(1)) == Rows{{1}});
  CHECK(rows_of(build_M(2)) == Rows{{1, 0}, {1, 1}});
  CHECK(rows_of(build_M(3)) == Rows{{1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 0}, {1, 0, 1, 1, 0, 0},
                                    {1, 1, 0, 0, 1, 0}, {1, 0, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1}});
  for (int n = 1; n <= 6; ++n) {
    const auto m = build_M(n);
    const auto all = simple_enumeration(n);
    REQUIRE(m.simples() == all);
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < m.size(); ++c) REQUIRE(m.at(r, c) == oracle::normal_by_divisibility(all[r], all[c]));
    }
  }
  CHECK_THROWS_AS(build_M(9), CapExceeded);
  CHECK_THROWS_AS(build_M(5, 4), CapExceeded);
  CHECK_THROWS_AS(build_M(0), std::invalid_argument);
}

TEST_CASE("structural laws of the normality matrix") {
  for (int n = 1; n <= 6; ++n) {
    const auto report = structural_check_M(n);
    CHECK(report.borders);
    CHECK(report.stacked_blocks);
    CHECK(report.descent_classes);
  }
}

TEST_CASE("descent-set matrix") {
  CHECK(build_Mprime(1).to_rows() == Rows{{1}});
  CHECK(build_Mprime(3).to_rows() == Rows{{1, 0, 0, 0}, {2, 1, 1, 0}, {2, 1, 1, 0}, {1, 1, 1, 1}});
  CHECK(build_Mprime(3).labels() == std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"});
  for (int n = 1; n <= 8; ++n) {
    const auto m = build_Mprime(n);
    Integer column_sum = 0;
    for (std::size_t r = 0; r < m.size(); ++r) column_sum += m.at(r, 0);
    CHECK(column_sum == factorial(static_cast<unsigned>(n)));
  }
  CHECK_THROWS_AS(build_Mprime(13), CapExceeded);
}

TEST_CASE("partition matrix displays") {
  CHECK(build_Mbar(3).to_rows() == Rows{{1, 0, 0}, {4, 2, 0}, {1, 1, 1}});
  CHECK(build_Mbar(5).to_rows() == Rows{{1, 0, 0, 0, 0, 0, 0}, {26, 8, 0, 2, 0, 0, 0}, {23, 12, 4, 5, 0, 1, 0},
                                        {43, 21, 5, 10, 0, 2, 0}, {8, 6, 4, 4, 2, 2, 0}, {18, 12, 6, 8, 2, 4, 0},
                                        {1, 1, 1, 1, 1, 1, 1}});
  // The four-strand display lists (2,2) before (3,1); compare by label.
  const std::vector<std::string> shown = {"(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"};
  const Rows display = {{1, 0, 0, 0, 0}, {11, 4, 1, 0, 0}, {5, 3, 2, 1, 0}, {6, 4, 2, 2, 0}, {1, 1, 1, 1, 1}};
  const auto m4 = build_Mbar(4);
  const PartitionOrder order(4);
  for (std::size_t r = 0; r < shown.size(); ++r) {
    for (std::size_t c = 0; c < shown.size(); ++c) {
      const auto i = order.index_of(parse_partition(shown[r]));
      const auto j = order.index_of(parse_partition(shown[c]));
      CHECK(m4.at(i, j) == static_cast<long>(display[r][c]));
    }
  }
  CHECK_THROWS_AS(build_Mbar(13), CapExceeded);
}

TEST_CASE("sweep and contingency builders agree") {
  for (int n = 1; n <= 9; ++n) {
    REQUIRE(build_Mbar(n, MbarMethod::Sweep) == build_Mbar(n, MbarMethod::Contingency));
  }
}

TEST_CASE("partition matrix is the column-collapse of the descent-set matrix") {
  for (int n = 1; n <= 8; ++n) {
    const auto mp = build_Mprime(n);
    const auto mb = build_Mbar(n);
    const PartitionOrder order(n);
    std::vector<std::vector<Integer>> collapsed(order.size(), std::vector<Integer>(order.size()));
    for (std::uint32_t i = 0; i < mp.size(); ++i) {
      for (std::size_t c = 0; c < order.size(); ++c) {
        collapsed[order.index_of_mask(i)][c] += mp.at(i, set_of_partition(order[c]).bits());
      }
    }
    for (std::size_t r = 0; r < order.size(); ++r) {
      for (std::size_t c = 0; c < order.size(); ++c) REQUIRE(collapsed[r][c] == mb.at(r, c));
    }
  }
}

TEST_CASE("published counts") {
  const int n3[] = {1, 3, 7, 15, 31, 63};
  for (int d = 1; d <= 6; ++d) CHECK(b_of_partition(3, d, PartitionN({2, 1})) == n3[d - 1]);
  CHECK(b_of_partition(6, 6, PartitionN::ones(6)) == Integer("49477263360"));
  for (int d = 1; d <= 8; ++d) {
    CHECK(b_of_simple(2, d, Permutation::identity(2)) == d);
    CHECK(b_of_simple(2, d, Permutation::flip(2)) == 1);
  }
  CHECK(b_of_simple(4, 5, Permutation::partial_flip(3, 4)) == 309);
  CHECK(b_total(3, 3) == 48);
  CHECK(b_total(4, 5) == 45252);
  CHECK(b_total(5, 0) == 1);
  for (int n = 1; n <= 7; ++n) {
    CHECK(b_total(n, 1) == factorial(static_cast<unsigned>(n)));
    const DegreeCounter counter(n, 3);
    for (const auto& lambda : counter.order().partitions()) CHECK(counter.b_of_partition(1, lambda) == 1);
  }
  CHECK(b_delta(5, 4, 2) == 5260);
  CHECK(b_delta(6, 3, 1) == 63);
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; d <= 5; ++d) CHECK(b_delta(n, d, n) == b_total(n, d - 1));
  }
  CHECK_THROWS_AS(b_delta(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(b_delta(4, 2, 5), std::invalid_argument);
}

TEST_CASE("large degrees stay exact") {
  const DegreeCounter counter(3, 1000);
  const Integer two_d = power(Integer(2), 1000);
  CHECK(counter.b_total(1000) == 8 * two_d - 3 * 1000 - 7);
  CHECK(counter.b_of_partition(1000, PartitionN({2, 1})) == two_d - 1);
}

TEST_CASE("all counting paths agree") {
  for (int n = 1; n <= 5; ++n) {
    const int dmax = 6;
    const auto m = build_M(n);
    const auto mp = build_Mprime(n);
    const auto mb = build_Mbar(n);
    const PartitionOrder order(n);
    const auto via_m = orbit(m, dmax + 1);
    const auto via_mp = orbit(mp, dmax);
    const auto via_mb = orbit(mb, dmax);
    // Last unit row through M: (0,...,0,1) M^d.
    CountVector last(m.size());
    last.back() = 1;
    for (int d = 1; d <= dmax; ++d) {
      last = row_times(last, m);
      for (std::size_t k = 0; k < m.size(); ++k) {
        const auto& x = m.simples()[k];
        const Integer& value = via_m[static_cast<std::size_t>(d - 1)][k];
        REQUIRE(last[k] == value);
        REQUIRE(via_mp[static_cast<std::size_t>(d - 1)][d_left(x).bits()] == value);
        REQUIRE(via_mb[static_cast<std::size_t>(d - 1)][order.index_of_mask(d_left(x).bits())] == value);
      }
    }
  }
  // The public entry point on every path, spot-checked.
  const auto x = Permutation{3, 1, 2, 4};
  for (auto path : {CountPath::Mbar, CountPath::MOnes, CountPath::MLastRow, CountPath::Mprime}) {
    CHECK(b_of_simple(4, 4, x, path) == b_of_simple(4, 4, x));
  }
  CHECK_THROWS_AS(b_of_simple(9, 2, Permutation::identity(9), CountPath::MOnes), CapExceeded);
}

TEST_CASE("totals, bound and partition invariance") {
  for (int n = 1; n <= 5; ++n) {
    const DegreeCounter counter(n, 6);
    const auto all = simple_enumeration(n);
    const Integer nf = factorial(static_cast<unsigned>(n));
    for (int d = 1; d <= 5; ++d) {
      Integer sum = 0;
      std::map<PartitionN, Integer> by_partition;
      for (const auto& x : all) {
        const Integer v = counter.b_of_simple(d, x);
        sum += v;
        auto [it, fresh] = by_partition.emplace(partition_of(d_left(x)), v);
        REQUIRE((fresh || it->second == v));
      }
      CHECK(counter.b_total(d) == sum);
      CHECK(counter.b_total(d) == counter.b_of_simple(d + 1, Permutation::identity(n)));
      CHECK(counter.b_total(d) <= power(nf, static_cast<unsigned>(d)));
    }
  }
}

TEST_CASE("count matrix helpers") {
  const auto m = build_Mbar(4);
  CHECK(m.transposed().transposed() == m);
  CHECK(m.transposed().at(0, 1) == m.at(1, 0));
  CHECK(name(MatrixKind::Mprime) == "Mprime");
  CHECK(parse_matrix_kind("Mbar") == MatrixKind::Mbar);
  CHECK_THROWS_AS(parse_matrix_kind("mbar"), std::invalid_argument);
  CHECK(delta_partition(5, 2) == PartitionN({3, 1, 1}));
  CHECK(delta_partition(4, 4) == PartitionN::ones(4));
}

TEST_CASE("worker count honours GC_THREADS") {
  ::setenv("GC_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  ::setenv("GC_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  CHECK(build_Mbar(7, MbarMethod::Sweep) == build_Mbar(7, MbarMethod::Contingency));
  ::unsetenv("GC_THREADS");
  CHECK(worker_count() >= 1);
}
