#include <arm_neon.h>

#include "kernel_impl.hpp"

namespace garside::kernels::detail {

namespace {

const uint8_t kByteWeights[16] = {1, 2, 4, 8, 16, 32, 64, 128, 1, 2, 4, 8, 16, 32, 64, 128};
const uint32_t kLaneWeights[4] = {1, 2, 4, 8};

std::uint32_t movemask_u8(uint8x16_t v) {
  const uint8x16_t weighted = vandq_u8(v, vld1q_u8(kByteWeights));
  const auto lo = static_cast<std::uint32_t>(vaddv_u8(vget_low_u8(weighted)));
  const auto hi = static_cast<std::uint32_t>(vaddv_u8(vget_high_u8(weighted)));
  return lo | (hi << 8);
}

void descent_masks_neon(const std::uint8_t* rows, std::size_t count, int n, std::uint32_t* out) {
  const std::uint32_t keep = low_mask(n);
  const uint8x16_t zero = vdupq_n_u8(0);
  for (std::size_t r = 0; r < count; ++r) {
    const uint8x16_t v = vld1q_u8(rows + r * kRowStride);
    const uint8x16_t next = vextq_u8(v, zero, 1);
    out[r] = movemask_u8(vcgtq_u8(v, next)) & keep;
  }
}

void normal_row_bits_neon(std::uint32_t right, const std::uint32_t* left, std::size_t count,
                          std::uint64_t* out) {
  const uint32x4_t r = vdupq_n_u32(right);
  const uint32x4_t weights = vld1q_u32(kLaneWeights);
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  std::size_t c = 0;
  for (; c + 4 <= count; c += 4) {
    const uint32x4_t outside = vbicq_u32(vld1q_u32(left + c), r);
    const uint32x4_t ok = vceqq_u32(outside, vdupq_n_u32(0));
    const auto bits = static_cast<std::uint64_t>(vaddvq_u32(vandq_u32(ok, weights)));
    out[c / 64] |= bits << (c % 64);
  }
  for (; c < count; ++c) {
    if ((left[c] & ~right) == 0) out[c / 64] |= std::uint64_t{1} << (c % 64);
  }
}

void matvec_neon(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t c = 0;
    for (; c + 2 <= cols; c += 2) acc = vfmaq_f64(acc, vld1q_f64(row + c), vld1q_f64(x + c));
    double sum = vaddvq_f64(acc);
    for (; c < cols; ++c) sum += row[c] * x[c];
    y[r] = sum;
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Isa::Neon, descent_masks_neon, normal_row_bits_neon, matvec_neon};
  return table;
}

}  // namespace garside::kernels::detail
