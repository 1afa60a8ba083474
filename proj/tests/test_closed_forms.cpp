#include "doctest.h"
#include "garside/closed_forms.hpp"
#include "garside/incidence.hpp"

using namespace garside;

TEST_CASE("three strands") {
  CHECK(b3_closed(2, PartitionN({1, 1, 1})) == 6);
  CHECK(b3_closed(5, PartitionN({2, 1})) == 31);
  CHECK(b3_closed(7, PartitionN({3})) == 1);
  CHECK(b3_total_closed(1) == 6);
  CHECK_THROWS_AS(b3_closed(2, PartitionN({2, 2})), std::invalid_argument);
  CHECK(b3_report(20).passed());
}

TEST_CASE("four-strand recurrence") {
  const auto u = b4_recurrence(5);
  CHECK(u[1] == 24);
  CHECK(u[2] == 211);
  CHECK(u[5] == 45252);
  CHECK(b4_recurrence_check(20).passed());
  CHECK_THROWS_AS(b4_recurrence_check(1), std::invalid_argument);
}

TEST_CASE("degree two") {
  const auto b = b_n2_recurrence(12);
  CHECK(b[1] == 1);
  CHECK(b[2] == 3);
  CHECK(b[3] == 19);
  CHECK(b[4] == 211);
  CHECK(b[5] == 3651);
  CHECK(b[6] == 90921);
  CHECK(b_n2_report(8).passed());
  for (int order = 0; order <= 12; ++order) CHECK(gf_identity_check(order));
  CHECK(formula_report("bn2-gf", 12, 2).passed());
}

TEST_CASE("degree two below a partial fundamental braid") {
  CHECK(b_n2_delta(4, 2) == 12);
  CHECK(b_n2_delta(5, 2) == 20);
  CHECK(b_n2_delta(6, 6) == 720);
  CHECK_THROWS_AS(b_n2_delta(3, 4), std::invalid_argument);
  CHECK(b_n2_delta_report(8).passed());
}

TEST_CASE("degree three") {
  CHECK(b_n3_delta1(2) == 3);
  CHECK(b_n3_delta1(3) == 7);
  CHECK(b_n3_delta1(6) == 63);
  CHECK(b_n3_delta1_printed(6) == 32);
  const auto r1 = b_n3_delta1_report(8);
  CHECK(r1.passed());
  bool flagged = false;
  for (const auto& p : r1.points) flagged = flagged || (p.informational && !p.match);
  CHECK(flagged);

  CHECK(b_n3_delta2(4) == 83);
  CHECK(b_n3_delta2(5) == 311);
  CHECK(b_n3_delta2_sums_printed(3) == 19);
  CHECK(b_n3_delta2_sums_printed(4) == 77);
  CHECK(b_n3_delta2_sums_printed(5) == 291);
  for (int n = 3; n <= 10; ++n) {
    CHECK(b_n3_delta2_sums(n) == b_n3_delta2(n));
    CHECK(b_n3_delta2_sums(n) - b_n3_delta2_sums_printed(n) == power(Integer(2), static_cast<unsigned>(n)) - 2 * n - 2);
  }
  CHECK(b_n3_delta2_report(8).passed());
}

TEST_CASE("degree four") {
  CHECK(b_n4_delta1(3) == 15);
  CHECK(b_n4_delta1(4) == 64);
  CHECK(b_n4_delta1(5) == 325);
  CHECK(b_n4_delta1(6) == 1956);
  for (int n = 1; n <= 10; ++n) CHECK(b_n4_delta1_compositions(n) == b_n4_delta1(n));
  CHECK(b_n4_delta1_report(10, 7).passed());
  CHECK(DegreeCounter(6, 4).b_delta(4, 1) == 1956);
}

TEST_CASE("composition identity and the e identity") {
  CHECK(f_identity_check(12));
  CHECK(f_identity_report(12).passed());
  CHECK(floor_e_identity(1) == 1);
  CHECK(floor_e_identity(3) == 15);
  CHECK(floor_e_identity(4) == 64);
  for (int n = 1; n <= 12; ++n) CHECK(floor_e_identity(n) == b_n4_delta1(n));
  CHECK(floor_e_report(12).passed());
}

TEST_CASE("recurrence for the factorial sum") {
  const auto r = cor47_check(6);
  CHECK(r.passed());
  int printed_mismatches = 0;
  for (const auto& p : r.points) {
    if (p.at == "n=2,printed") CHECK(p.formula == 5);
    if (p.at == "n=3,+n") CHECK(p.formula == 15);
    if (p.at == "n=5,+n") CHECK(p.formula == 325);
    if (p.informational && !p.match) ++printed_mismatches;
  }
  CHECK(printed_mismatches == 5);
}

TEST_CASE("reports by id") {
  for (const auto& id : formula_ids()) CHECK_MESSAGE(formula_report(id, 7, 12).passed(), id);
  CHECK_THROWS_AS(formula_report("nope", 5, 5), std::invalid_argument);
  FormulaReport r{"x", "", {}};
  r.add("a", Integer(1), Integer(2));
  CHECK_FALSE(r.passed());
}
