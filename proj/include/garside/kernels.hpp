#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

/// Data-parallel inner loops with a scalar reference implementation and
/// SIMD variants chosen at runtime. All variants of an integer kernel produce
/// bit-identical output; the floating-point kernel agrees up to rounding.
namespace garside::kernels {

/// Bytes per packed permutation row. A row holds up to 16 one-line values
/// (each below 128); bytes past n are ignored.
inline constexpr std::size_t kRowStride = 16;
inline constexpr int kMaxPackedStrands = 16;

enum class Isa { Scalar, Avx2, Neon };

std::string_view name(Isa isa);

struct KernelTable {
  Isa isa;
  /// out[r] = bit mask of { i : row_r[i-1] > row_r[i] } over 1 <= i < n (bit i-1).
  void (*descent_masks)(const std::uint8_t* rows, std::size_t count, int n, std::uint32_t* out);
  /// Bit c of out (64 per word) is set iff (left[c] & ~right) == 0, i.e. the
  /// column's left descents are all right descents of the row.
  void (*normal_row_bits)(std::uint32_t right, const std::uint32_t* left, std::size_t count,
                          std::uint64_t* out);
  /// y = A x for a row-major rows x cols matrix.
  void (*matvec)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
};

const KernelTable& scalar_kernels();

/// Variants compiled into this build and supported by the running CPU.
std::vector<Isa> available_isas();
/// Throws std::runtime_error when the variant is unavailable.
const KernelTable& kernels_for(Isa isa);
/// Best available variant. The environment variable GC_KERNELS
/// (scalar|avx2|neon) forces a specific one.
const KernelTable& active();

inline void descent_masks(std::span<const std::uint8_t> rows, int n, std::span<std::uint32_t> out) {
  active().descent_masks(rows.data(), out.size(), n, out.data());
}

inline void normal_row_bits(std::uint32_t right, std::span<const std::uint32_t> left,
                            std::span<std::uint64_t> out) {
  active().normal_row_bits(right, left.data(), left.size(), out.data());
}

inline void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
                   std::span<const double> x, std::span<double> y) {
  active().matvec(a.data(), rows, cols, x.data(), y.data());
}

}  // namespace garside::kernels
