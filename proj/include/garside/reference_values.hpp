#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garside/polynomial.hpp"

namespace garside::reference {

/// A printed row of published degree counts: b_{n,d}(Delta_k) for d = 1..6,
/// where k = 1 stands for the identity.
struct CountRow {
  int n;
  int k;
  std::string printed_label;
  std::vector<long long> values;
  /// The printed label names a different n than the row's position implies.
  bool label_discrepancy = false;
};

const std::vector<CountRow>& count_table();

/// Note for a printed cell that disagrees with the closed form, if any.
std::optional<std::string> cell_discrepancy(int n, int k, int d);

/// Published new factor of the partition-matrix characteristic polynomial at
/// n (1 <= n <= 8); n = 1 gives x - 1.
IntPolynomial new_factor(int n);
/// Product of new_factor(1..n).
IntPolynomial charpoly_product(int n);

/// Published dominant eigenvalue, three decimals (1 <= n <= 8).
double rho(int n);
/// Published rho(n) / (n rho(n-1)) (2 <= n <= 8).
double ratio(int n);

inline constexpr int kMaxTabulated = 8;

}  // namespace garside::reference
