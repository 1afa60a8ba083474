#pragma once

#include <string>
#include <vector>

#include "garside/compositions.hpp"
#include "garside/integer.hpp"

namespace garside {

/// One evaluated point: the formula value against an independent value
/// (usually the matrix pipeline).
struct FormulaPoint {
  std::string at;
  Integer formula;
  Integer reference;
  bool match = false;
  /// Informational points record a printed variant that is known to disagree;
  /// they never fail a report.
  bool informational = false;
  std::string note;
};

struct FormulaReport {
  std::string id;
  std::string range;
  std::vector<FormulaPoint> points;

  bool passed() const;
  void add(std::string at, Integer formula, Integer reference, std::string note = {});
  void add_informational(std::string at, Integer formula, Integer reference, std::string note);
};

/// Per-partition degree counts for three strands; throws std::invalid_argument
/// for a partition of anything but 3.
Integer b3_closed(int d, const PartitionN& lambda);
Integer b3_total_closed(int d);
FormulaReport b3_report(int dmax);

/// u_d = 6 u_{d-1} - 3 u_{d-2} + 32 * 2^d - 12 d - 34, u_{-1} = 0, u_0 = 1,
/// for d = 0 .. dmax.
std::vector<Integer> b4_recurrence(int dmax);
FormulaReport b4_recurrence_check(int dmax);

/// b_{n,2} for n = 0 .. nmax from the alternating squared-binomial recurrence.
std::vector<Integer> b_n2_recurrence(int nmax);
FormulaReport b_n2_report(int nmax);
/// The product of the exponential-square series of b_{n,2} with that of
/// (-1)^n has vanishing coefficients in degrees 1 .. order.
bool gf_identity_check(int order);

/// n! / (n-r)!
Integer b_n2_delta(int n, int r);
FormulaReport b_n2_delta_report(int nmax);

/// 2^n - 1. The printed variant 2^{n-1} is reported as informational.
Integer b_n3_delta1(int n);
Integer b_n3_delta1_printed(int n);
FormulaReport b_n3_delta1_report(int nmax);

/// 2 * 3^n - (n + 6) 2^{n-1} + 1
Integer b_n3_delta2(int n);
/// Four multinomial sums as printed: one term short when both blocks of a
/// two-block set have size at least 2.
Integer b_n3_delta2_sums_printed(int n);
/// The printed sums plus the missing term: sum over p1 + p2 = n, p1, p2 >= 2.
Integer b_n3_delta2_sums(int n);
FormulaReport b_n3_delta2_report(int nmax);

/// sum_{i=0}^{n-1} n!/i!
Integer b_n4_delta1(int n);
/// Sum over compositions (p_1..p_k) of n of the multinomial times
/// p_1 (p_2 - 1) ... (p_{k-1} - 1) p_k; the one-part composition contributes n.
Integer b_n4_delta1_compositions(int n);
FormulaReport b_n4_delta1_report(int nmax, int pipeline_nmax);

/// For i = 0 .. imax, the composition sum of (p_1-1)/p_1! ... (p_{k-1}-1)/p_{k-1}! p_k/p_k!
/// over compositions of i + 1 equals 1.
bool f_identity_check(int imax);
FormulaReport f_identity_report(int imax);

/// floor(n! e) - 1, with e bracketed between rational bounds; throws
/// std::logic_error if the bounds do not pin the floor.
Integer floor_e_identity(int n);
FormulaReport floor_e_report(int nmax);

/// Compares the printed recurrence u_n = n u_{n-1} + 2n - 1 and the recurrence
/// u_n = n u_{n-1} + n (both from u_1 = 1) against the factorial sum.
FormulaReport cor47_check(int nmax);

/// Identifiers accepted by formula_report.
std::vector<std::string> formula_ids();
/// Runs one check by id; throws std::invalid_argument for an unknown id.
FormulaReport formula_report(const std::string& id, int nmax, int dmax);

}  // namespace garside
