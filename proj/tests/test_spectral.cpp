#include <cmath>

#include "doctest.h"
#include "garside/reference_values.hpp"
#include "garside/spectral.hpp"
#include "support/oracles.hpp"

using namespace garside;

namespace {

IntPolynomial lead(std::initializer_list<long> c) { return IntPolynomial::from_leading(c); }

CountMatrix matrix_from(const std::vector<std::vector<long>>& rows) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < rows.size(); ++k) labels.push_back(std::to_string(k));
  CountMatrix m(MatrixKind::Mbar, 1, labels);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto p = lead({1, -6, 3});
  CHECK(p.degree() == 2);
  CHECK(to_string(p) == "x^2 - 6*x + 3");
  CHECK(coefficient_list(p) == "[3,-6,1]");
  CHECK(to_string(IntPolynomial{}) == "0");
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(p.evaluate(Integer(1)) == -2);
  CHECK(p.derivative() == lead({2, -6}));
  CHECK(p * IntPolynomial::linear(Integer(2)) == lead({1, -8, 15, -6}));
  CHECK((p - p).is_zero());
  CHECK(pow(IntPolynomial::linear(Integer(1)), 3) == lead({1, -3, 3, -1}));
  CHECK(strip_x_power(lead({1, -2, 0, 0})) == lead({1, -2}));
  CHECK(x_valuation(lead({1, -2, 0, 0})) == 2);
}

TEST_CASE("division, gcd and squarefreeness") {
  const auto a = lead({1, -1});
  const auto b = a * lead({1, -2});
  CHECK(divides(a, b));
  CHECK(exact_quotient(b, a) == lead({1, -2}));
  CHECK_FALSE(divides(lead({1, -3}), b));
  CHECK_FALSE(exact_quotient(lead({1, 0, 1}), lead({2, 0})).has_value());
  CHECK_THROWS_AS(divides(IntPolynomial{}, b), std::domain_error);
  CHECK(gcd(b, a * a) == a);
  CHECK(gcd(lead({2, -4}), lead({3, -6})) == lead({1, -2}));
  CHECK(is_squarefree(b));
  CHECK_FALSE(is_squarefree(a * a));
}

TEST_CASE("characteristic polynomials of small matrices") {
  CHECK(charpoly(build_Mbar(3)) == lead({1, -1}) * lead({1, -1}) * lead({1, -2}));
  CHECK(charpoly(build_Mbar(4)) == lead({1, -1}) * lead({1, -1}) * lead({1, -2}) * lead({1, -6, 3}));
  for (int k = 1; k <= 6; ++k) {
    std::vector<std::vector<long>> id(static_cast<std::size_t>(k), std::vector<long>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CHECK(charpoly(matrix_from(id)) == pow(lead({1, -1}), static_cast<unsigned>(k)));
  }
}

TEST_CASE("Berkowitz agrees with cofactor expansion") {
  oracle::Gen gen(0x5eed20);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = gen.uniform(1, 5);
    const auto a = gen.matrix(size, -9, 9);
    std::vector<Integer> flat;
    for (const auto& row : a) {
      for (long e : row) flat.emplace_back(e);
    }
    REQUIRE(charpoly(flat, static_cast<std::size_t>(size)) == oracle::naive_charpoly(a));
  }
  CHECK_THROWS_AS(charpoly(std::vector<Integer>(5), 2), std::invalid_argument);
}

TEST_CASE("row compression is exact") {
  oracle::Gen gen(0x5eed21);
  for (int trial = 0; trial < 100; ++trial) {
    const int size = gen.uniform(1, 7);
    auto a = gen.matrix(size, 0, 4);
    // Force repeated rows.
    for (auto& row : a) {
      if (gen.uniform(0, 2) == 0) row = a[static_cast<std::size_t>(gen.uniform(0, size - 1))];
    }
    const auto m = matrix_from(a);
    REQUIRE(charpoly_row_compressed(m) == charpoly(m));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto m = build_M(n);
    CHECK(charpoly(m) == charpoly(m.to_count_matrix()));
  }
}

TEST_CASE("the three matrices share their nonzero spectrum") {
  for (int n = 1; n <= 6; ++n) {
    const auto bar = strip_x_power(charpoly(build_Mbar(n)));
    CHECK(strip_x_power(charpoly(build_Mprime(n))) == bar);
    CHECK(strip_x_power(charpoly(build_M(n))) == bar);
    CHECK(charpoly(build_Mbar(n)).degree() == static_cast<int>(partition_count(n).get_si()));
  }
}

TEST_CASE("published characteristic polynomials and nesting") {
  IntPolynomial previous = IntPolynomial::constant(1);
  for (int n = 1; n <= 9; ++n) {
    const auto p = charpoly(build_Mbar(n));
    if (n <= reference::kMaxTabulated) CHECK(p == reference::charpoly_product(n));
    CHECK(divides(previous, p));
    previous = p;
  }
  const auto r3 = new_factor_simple_roots(3);
  CHECK(*r3.quotient == lead({1, -2}));
  const auto r4 = new_factor_simple_roots(4);
  CHECK(*r4.quotient == lead({1, -6, 3}));
  CHECK(r4.expected_degree == 2);
  CHECK(r4.passed());
  const auto r8 = new_factor_simple_roots(8);
  CHECK(*r8.quotient == reference::new_factor(8));
  CHECK(r8.expected_degree == 7);
  CHECK(r8.passed());
  CHECK(r8.coprime_with_previous);
  // The repeated root at two strands: passes, but not coprime.
  const auto r2 = new_factor_simple_roots(2);
  CHECK(r2.passed());
  CHECK_FALSE(r2.coprime_with_previous);
  CHECK_THROWS_AS(new_factor_simple_roots(1), std::invalid_argument);
}

TEST_CASE("a failed divisibility is reported") {
  const auto r = new_factor_report(3, lead({1, -5}), lead({1, -1}) * lead({1, -2}));
  CHECK_FALSE(r.divides);
  CHECK_FALSE(r.passed());
}

TEST_CASE("dominant eigenvalues") {
  CHECK(rho_max(build_Mbar(3)).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(rho_max(build_Mbar(4)).value - (3 + std::sqrt(6.0))) < 1e-6);
  CHECK(std::abs(rho_max(build_Mbar(8)).value - 2066.575) < 5e-3);
  for (int n = 3; n <= 7; ++n) {
    const auto m = build_Mbar(n);
    CHECK(std::abs(rho_max(m).value - rho_max(m.transposed()).value) < 1e-6);
  }
  CHECK(growth_ratio(6.0, 2.0, 3) == doctest::Approx(1.0));
  CHECK_THROWS_AS(rho_max(build_Mbar(5), 1e-300, 3), NonConvergence);
  CHECK_THROWS_AS(rho_max(matrix_from({{1, -1}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("linear recurrences from characteristic polynomials") {
  const DegreeCounter c3(3, 20);
  std::vector<Integer> totals;
  for (int d = 1; d <= 20; ++d) totals.push_back(c3.b_total(d));
  CHECK(recurrence_check(totals, charpoly(build_Mbar(3))));
  CHECK(recurrence_check(std::vector<Integer>(6, Integer(7)), lead({1, -1})));
  const DegreeCounter c4(4, 20);
  std::vector<Integer> delta3;
  for (int d = 1; d <= 20; ++d) delta3.push_back(c4.b_delta(d, 1));
  CHECK(recurrence_check(delta3, charpoly(build_Mbar(4))));
  delta3[10] += 1;
  CHECK_FALSE(recurrence_check(delta3, charpoly(build_Mbar(4))));
  CHECK_THROWS_AS(recurrence_check(std::vector<Integer>(2, Integer(1)), charpoly(build_Mbar(4))), std::invalid_argument);
}
