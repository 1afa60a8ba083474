#pragma once

#include "garside/kernels.hpp"

namespace garside::kernels::detail {

void descent_masks_scalar(const std::uint8_t* rows, std::size_t count, int n, std::uint32_t* out);
void normal_row_bits_scalar(std::uint32_t right, const std::uint32_t* left, std::size_t count,
                            std::uint64_t* out);
void matvec_scalar(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);

#if defined(GARSIDE_KERNEL_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(GARSIDE_KERNEL_NEON)
const KernelTable& neon_table();
#endif

inline std::uint32_t low_mask(int n) {
  return n <= 1 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << (n - 1)) - 1);
}

}  // namespace garside::kernels::detail
