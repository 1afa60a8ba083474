#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "garside/incidence.hpp"
#include "garside/integer.hpp"
#include "garside/polynomial.hpp"

namespace garside {

/// det(x I - A) for a dense row-major square matrix, by the division-free
/// Berkowitz recursion over exact integers.
IntPolynomial charpoly(std::span<const Integer> entries, std::size_t size);
IntPolynomial charpoly(const CountMatrix& m);

/// Characteristic polynomial through the factorisation A = P B, where B holds
/// the distinct rows of A and P maps each row to its class:
/// det(x I - P B) = x^(N - R) det(x I - B P). Exact for any matrix; cheap when
/// rows repeat.
IntPolynomial charpoly_row_compressed(const CountMatrix& m);
IntPolynomial charpoly(const NormalityMatrix& m);

/// Outcome of checking that the characteristic polynomial of the partition
/// matrix for n - 1 divides the one for n, with a squarefree new factor.
struct NewFactorReport {
  int n = 0;
  IntPolynomial previous;
  IntPolynomial current;
  std::optional<IntPolynomial> quotient;
  int expected_degree = 0;
  bool divides = false;
  bool degree_matches = false;
  bool nonzero_constant = false;
  bool squarefree = false;
  /// Informational: no common root with the previous polynomial.
  bool coprime_with_previous = false;

  bool passed() const { return divides && degree_matches && nonzero_constant && squarefree; }
};

NewFactorReport new_factor_report(int n, const IntPolynomial& previous, const IntPolynomial& current);
/// Builds both partition matrices and compares their characteristic polynomials.
NewFactorReport new_factor_simple_roots(int n, const SizeCaps& caps = {});

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DominantEigenvalue {
  double value = 0.0;
  int iterations = 0;
};

/// Power iteration from the all-ones vector on a non-negative matrix; stops when
/// successive Rayleigh quotients differ by less than tol. Throws NonConvergence
/// after max_iterations.
DominantEigenvalue rho_max(const CountMatrix& m, double tol = 1e-9, int max_iterations = 2'000'000);

/// rho(n) / (n * rho(n-1))
double growth_ratio(double rho_n, double rho_previous, int n);

/// True iff every window of seq satisfies the linear recurrence whose
/// coefficients are those of strip_x_power(p). Throws std::invalid_argument if
/// seq is not longer than that recurrence's order.
bool recurrence_check(std::span<const Integer> seq, const IntPolynomial& p);

}  // namespace garside
