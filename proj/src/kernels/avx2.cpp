#include <immintrin.h>

#include "kernel_impl.hpp"

namespace garside::kernels::detail {

namespace {

void descent_masks_avx2(const std::uint8_t* rows, std::size_t count, int n, std::uint32_t* out) {
  const std::uint32_t keep = low_mask(n);
  std::size_t r = 0;
  // Two rows per register; the byte shift stays inside each 128-bit lane.
  for (; r + 2 <= count; r += 2) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r * kRowStride));
    const __m256i next = _mm256_srli_si256(v, 1);
    const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(v, next)));
    out[r] = bits & keep;
    out[r + 1] = (bits >> 16) & keep;
  }
  if (r < count) {
    const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(rows + r * kRowStride));
    const __m128i next = _mm_srli_si128(v, 1);
    out[r] = static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpgt_epi8(v, next))) & keep;
  }
}

void normal_row_bits_avx2(std::uint32_t right, const std::uint32_t* left, std::size_t count,
                          std::uint64_t* out) {
  const __m256i r = _mm256_set1_epi32(static_cast<int>(right));
  const __m256i zero = _mm256_setzero_si256();
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  std::size_t c = 0;
  for (; c + 8 <= count; c += 8) {
    const __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(left + c));
    const __m256i outside = _mm256_andnot_si256(r, l);
    const __m256i ok = _mm256_cmpeq_epi32(outside, zero);
    const auto bits = static_cast<std::uint64_t>(_mm256_movemask_ps(_mm256_castsi256_ps(ok)));
    out[c / 64] |= bits << (c % 64);
  }
  for (; c < count; ++c) {
    if ((left[c] & ~right) == 0) out[c / 64] |= std::uint64_t{1} << (c % 64);
  }
}

void matvec_avx2(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t c = 0;
    for (; c + 8 <= cols; c += 8) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(row + c), _mm256_loadu_pd(x + c), acc0);
      acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(row + c + 4), _mm256_loadu_pd(x + c + 4), acc1);
    }
    for (; c + 4 <= cols; c += 4) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(row + c), _mm256_loadu_pd(x + c), acc0);
    }
    const __m256d acc = _mm256_add_pd(acc0, acc1);
    const __m128d pair = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    double sum = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
    for (; c < cols; ++c) sum += row[c] * x[c];
    y[r] = sum;
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::Avx2, descent_masks_avx2, normal_row_bits_avx2, matvec_avx2};
  return table;
}

}  // namespace garside::kernels::detail
