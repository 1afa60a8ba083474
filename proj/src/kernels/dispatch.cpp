#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernel_impl.hpp"

namespace garside::kernels {

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, detail::descent_masks_scalar,
                                 detail::normal_row_bits_scalar, detail::matvec_scalar};
  return table;
}

namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(GARSIDE_KERNEL_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(GARSIDE_KERNEL_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select_active() {
  if (const char* forced = std::getenv("GC_KERNELS"); forced != nullptr && *forced != '\0') {
    const std::string want = forced;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == name(isa)) return kernels_for(isa);
    }
    throw std::runtime_error("GC_KERNELS names an unknown kernel set: " + want);
  }
  const std::vector<Isa> isas = available_isas();
  return kernels_for(isas.back());
}

}  // namespace

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Neon, Isa::Avx2}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::runtime_error("kernel set " + std::string(name(isa)) + " is not available here");
  }
  switch (isa) {
    case Isa::Scalar:
      return scalar_kernels();
#if defined(GARSIDE_KERNEL_AVX2)
    case Isa::Avx2:
      return detail::avx2_table();
#endif
#if defined(GARSIDE_KERNEL_NEON)
    case Isa::Neon:
      return detail::neon_table();
#endif
    default:
      break;
  }
  throw std::runtime_error("kernel set " + std::string(name(isa)) + " is not compiled in");
}

const KernelTable& active() {
  static const KernelTable& table = select_active();
  return table;
}

}  // namespace garside::kernels
