#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "garside/kernels.hpp"
#include "support/oracles.hpp"

using namespace garside;
namespace k = garside::kernels;

namespace {

std::vector<std::uint8_t> packed_rows(oracle::Gen& gen, int n, std::size_t count) {
  std::vector<std::uint8_t> rows(count * k::kRowStride, 0);
  for (std::size_t r = 0; r < count; ++r) {
    const auto p = gen.permutation(n);
    for (int i = 1; i <= n; ++i) rows[r * k::kRowStride + static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(p(i));
    // garbage past n must be ignored
    for (std::size_t i = static_cast<std::size_t>(n); i < k::kRowStride; ++i) {
      rows[r * k::kRowStride + i] = static_cast<std::uint8_t>(gen.uniform(0, 127));
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("scalar kernels against a direct definition") {
  oracle::Gen gen(0x4b00);
  const auto& s = k::scalar_kernels();
  for (int n = 1; n <= k::kMaxPackedStrands; ++n) {
    const std::size_t count = 37;
    const auto rows = packed_rows(gen, n, count);
    std::vector<std::uint32_t> out(count);
    s.descent_masks(rows.data(), count, n, out.data());
    for (std::size_t r = 0; r < count; ++r) {
      std::uint32_t want = 0;
      for (int i = 1; i < n; ++i) {
        if (rows[r * k::kRowStride + static_cast<std::size_t>(i - 1)] > rows[r * k::kRowStride + static_cast<std::size_t>(i)]) {
          want |= 1u << (i - 1);
        }
      }
      REQUIRE(out[r] == want);
    }
  }
  std::vector<std::uint32_t> left(130);
  for (auto& l : left) l = static_cast<std::uint32_t>(gen.uniform(0, 63));
  std::vector<std::uint64_t> bits((left.size() + 63) / 64, ~0ull);
  const std::uint32_t right = 0b101101;
  s.normal_row_bits(right, left.data(), left.size(), bits.data());
  for (std::size_t c = 0; c < left.size(); ++c) {
    CHECK(((bits[c / 64] >> (c % 64)) & 1u) == ((left[c] & ~right) == 0 ? 1u : 0u));
  }
  for (std::size_t c = left.size(); c < bits.size() * 64; ++c) CHECK(((bits[c / 64] >> (c % 64)) & 1u) == 0u);

  const std::vector<double> a{1, 2, 3, 4, 5, 6};
  const std::vector<double> x{1, -1, 2};
  std::vector<double> y(2);
  s.matvec(a.data(), 2, 3, x.data(), y.data());
  CHECK(y[0] == 5.0);
  CHECK(y[1] == 11.0);
}

TEST_CASE("every available variant matches scalar") {
  const auto isas = k::available_isas();
  REQUIRE(!isas.empty());
  CHECK(isas.front() == k::Isa::Scalar);
  const auto& s = k::scalar_kernels();
  for (auto isa : isas) {
    CAPTURE(k::name(isa));
    const auto& v = k::kernels_for(isa);
    CHECK(v.isa == isa);
    oracle::Gen gen(0x4b01);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = gen.uniform(1, k::kMaxPackedStrands);
      const auto count = static_cast<std::size_t>(gen.uniform(0, 70));
      const auto rows = packed_rows(gen, n, count);
      std::vector<std::uint32_t> want(count), got(count);
      s.descent_masks(rows.data(), count, n, want.data());
      v.descent_masks(rows.data(), count, n, got.data());
      REQUIRE(got == want);

      const auto width = gen.uniform(1, 15);
      std::vector<std::uint32_t> left(count);
      for (auto& l : left) l = static_cast<std::uint32_t>(gen.uniform(0, (1 << width) - 1));
      const auto right = static_cast<std::uint32_t>(gen.uniform(0, (1 << width) - 1));
      std::vector<std::uint64_t> wb((count + 63) / 64 + 1, 0), gb((count + 63) / 64 + 1, 0);
      s.normal_row_bits(right, left.data(), count, wb.data());
      v.normal_row_bits(right, left.data(), count, gb.data());
      REQUIRE(gb == wb);

      const auto r = static_cast<std::size_t>(gen.uniform(1, 40));
      const auto c = static_cast<std::size_t>(gen.uniform(1, 40));
      std::vector<double> a(r * c), x(c), ya(r), yb(r);
      for (auto& e : a) e = gen.uniform(0, 1000) / 7.0;
      for (auto& e : x) e = gen.uniform(-1000, 1000) / 3.0;
      s.matvec(a.data(), r, c, x.data(), ya.data());
      v.matvec(a.data(), r, c, x.data(), yb.data());
      for (std::size_t i = 0; i < r; ++i) {
        double scale = 0;
        for (std::size_t j = 0; j < c; ++j) scale += std::abs(a[i * c + j] * x[j]);
        REQUIRE(std::abs(ya[i] - yb[i]) <= 1e-12 * (scale + 1));
      }
    }
  }
}

TEST_CASE("dispatch") {
  const auto& active = k::active();
  const auto isas = k::available_isas();
  CHECK(std::find(isas.begin(), isas.end(), active.isa) != isas.end());
  for (auto isa : {k::Isa::Scalar, k::Isa::Avx2, k::Isa::Neon}) {
    if (std::find(isas.begin(), isas.end(), isa) == isas.end()) CHECK_THROWS_AS(k::kernels_for(isa), std::runtime_error);
  }
}
