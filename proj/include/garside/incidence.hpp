#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/compositions.hpp"
#include "garside/integer.hpp"
#include "garside/permutation.hpp"

namespace garside {

enum class MatrixKind { M, Mprime, Mbar };

std::string_view name(MatrixKind kind);
/// Accepts "M", "Mprime", "Mbar" (case-sensitive); throws std::invalid_argument.
MatrixKind parse_matrix_kind(std::string_view text);

/// Raised when a builder is asked for a size above its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default size caps. Every builder takes its cap explicitly and throws
/// CapExceeded instead of truncating.
struct SizeCaps {
  int m = 8;
  int mprime = 12;
  int mbar = 12;
  /// Largest n for which the Mbar builder sweeps all permutations by default.
  int mbar_sweep = 10;
};

/// Square matrix of exact non-negative integers with row/column labels.
class CountMatrix {
 public:
  CountMatrix(MatrixKind kind, int n, std::vector<std::string> labels);

  MatrixKind kind() const { return kind_; }
  int n() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  Integer& at(std::size_t row, std::size_t col) { return entries_[row * size() + col]; }
  const Integer& at(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }
  std::span<const Integer> entries() const { return entries_; }

  CountMatrix transposed() const;

  /// Entries as nested rows of 64-bit values, for tests against literal tables.
  /// Throws std::overflow_error if an entry does not fit.
  std::vector<std::vector<long long>> to_rows() const;

  bool operator==(const CountMatrix&) const = default;

 private:
  MatrixKind kind_;
  int n_;
  std::vector<std::string> labels_;
  std::vector<Integer> entries_;
};

/// The n! x n! normality matrix over the canonical enumeration of simples,
/// stored as packed bit rows.
class NormalityMatrix {
 public:
  int n() const { return n_; }
  std::size_t size() const { return simples_.size(); }
  const std::vector<Permutation>& simples() const { return simples_; }
  bool at(std::size_t row, std::size_t col) const {
    return ((bits_[row * words_ + col / 64] >> (col % 64)) & 1u) != 0;
  }
  std::span<const std::uint64_t> row_bits(std::size_t row) const {
    return {bits_.data() + row * words_, words_};
  }
  std::vector<std::string> labels() const;
  /// Dense exact copy (entries 0/1).
  CountMatrix to_count_matrix() const;

 private:
  friend NormalityMatrix build_M(int n, int cap);
  int n_ = 1;
  std::size_t words_ = 0;
  std::vector<Permutation> simples_;
  std::vector<std::uint64_t> bits_;
};

/// Entry (k, l) is 1 iff (tau_k, tau_l) is a normal pair.
NormalityMatrix build_M(int n, int cap = SizeCaps{}.m);

/// Pass/fail for the three structural laws of the normality matrix.
struct StructuralReport {
  int n = 0;
  /// First column and last row all ones; first row and last column zero off the corner.
  bool borders = false;
  /// The first (n-1)! columns are n stacked copies of the matrix for n-1.
  bool stacked_blocks = false;
  /// Rows with equal right descents coincide; columns with equal left descents coincide.
  bool descent_classes = false;
  bool passed() const { return borders && stacked_blocks && descent_classes; }
};

StructuralReport structural_check_M(const NormalityMatrix& m);
StructuralReport structural_check_M(int n, int cap = SizeCaps{}.m);

/// 2^{n-1}-square matrix over subsets of [1, n-1] in binary-counting order with
/// entry (I, J) = a(I, J).
CountMatrix build_Mprime(int n, int cap = SizeCaps{}.mprime);

enum class MbarMethod {
  Auto,
  /// Histogram of (left-descent partition, right-descent set) over all n! permutations.
  Sweep,
  /// Contingency counts with inclusion-exclusion; no permutation enumeration.
  Contingency,
};

/// p(n)-square matrix over partitions_in_order(n) with entry (lambda, mu) the
/// number of simples x with partition_of(d_left(x)) == lambda and d_right(x)
/// containing set_of_partition(mu).
CountMatrix build_Mbar(int n, MbarMethod method = MbarMethod::Auto, const SizeCaps& caps = {});

/// Worker count for data-parallel builders: GC_THREADS if set, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// v * M
CountVector row_times(const CountVector& v, const CountMatrix& m);
CountVector row_times(const CountVector& v, const NormalityMatrix& m);

/// The vectors (1,...,1) M^{k} for k = 0 .. count-1.
std::vector<CountVector> ones_orbit(const CountMatrix& m, int count);

/// How b_{n,d}(x) is evaluated for a single simple.
enum class CountPath {
  /// Row of ones times Mbar^{d-1}, at the partition of d_left(x).
  Mbar,
  /// Row of ones times M^{d-1}.
  MOnes,
  /// Last unit row times M^{d}.
  MLastRow,
  /// Row of ones times M'^{d-1}, at d_left(x).
  Mprime,
};

/// b_{n,d}(x) for every simple x whose left-descent partition is lambda.
Integer b_of_partition(int n, int d, const PartitionN& lambda);
Integer b_of_simple(int n, int d, const Permutation& x, CountPath path = CountPath::Mbar,
                    const SizeCaps& caps = {});
/// Number of divisors of the d-th power of the fundamental braid; 1 for d == 0.
Integer b_total(int n, int d);
/// b_{n,d}(Delta_{n-r}) for 1 <= r <= n.
Integer b_delta(int n, int d, int r);
/// The partition (n-r, 1, ..., 1) of the left descents of Delta_{n-r}.
PartitionN delta_partition(int n, int r);

/// Reusable evaluation of many b values at a fixed n: holds Mbar and the orbit
/// of the row of ones. Immutable after construction.
class DegreeCounter {
 public:
  /// Computes rows for degrees 1 .. max_degree (plus one extra for totals).
  DegreeCounter(int n, int max_degree, MbarMethod method = MbarMethod::Auto, const SizeCaps& caps = {});

  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  const CountMatrix& mbar() const { return mbar_; }
  const PartitionOrder& order() const { return order_; }

  Integer b_of_partition(int d, const PartitionN& lambda) const;
  Integer b_of_simple(int d, const Permutation& x) const;
  Integer b_total(int d) const;
  Integer b_delta(int d, int r) const;

 private:
  const CountVector& row(int d) const;

  int n_;
  int max_degree_;
  PartitionOrder order_;
  CountMatrix mbar_;
  std::vector<CountVector> orbit_;
};

}  // namespace garside
