#include "kernel_impl.hpp"

namespace garside::kernels::detail {

void descent_masks_scalar(const std::uint8_t* rows, std::size_t count, int n, std::uint32_t* out) {
  for (std::size_t r = 0; r < count; ++r) {
    const std::uint8_t* row = rows + r * kRowStride;
    std::uint32_t bits = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (row[i] > row[i + 1]) bits |= std::uint32_t{1} << i;
    }
    out[r] = bits;
  }
}

void normal_row_bits_scalar(std::uint32_t right, const std::uint32_t* left, std::size_t count,
                            std::uint64_t* out) {
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t c = 0; c < count; ++c) {
    if ((left[c] & ~right) == 0) out[c / 64] |= std::uint64_t{1} << (c % 64);
  }
}

void matvec_scalar(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) sum += row[c] * x[c];
    y[r] = sum;
  }
}

}  // namespace garside::kernels::detail
