#include "garside/incidence.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "garside/kernels.hpp"

namespace garside {

namespace {

void check_cap(std::string_view what, int n, int cap) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(cap));
  }
}

// Right and left descent masks of each permutation, through the active kernels.
void descent_masks_of(std::span<const Permutation> perms, std::vector<std::uint32_t>& right,
                      std::vector<std::uint32_t>& left) {
  const std::size_t count = perms.size();
  const int n = perms.empty() ? 1 : perms.front().n();
  right.assign(count, 0);
  left.assign(count, 0);
  if (n > kernels::kMaxPackedStrands) {
    for (std::size_t k = 0; k < count; ++k) {
      right[k] = d_right(perms[k]).bits();
      left[k] = d_left(perms[k]).bits();
    }
    return;
  }
  std::vector<std::uint8_t> rows(count * kernels::kRowStride, 0);
  std::vector<std::uint8_t> inverse_rows(count * kernels::kRowStride, 0);
  for (std::size_t k = 0; k < count; ++k) {
    auto line = perms[k].one_line();
    for (int p = 0; p < n; ++p) {
      rows[k * kernels::kRowStride + static_cast<std::size_t>(p)] = line[static_cast<std::size_t>(p)];
      inverse_rows[k * kernels::kRowStride + line[static_cast<std::size_t>(p)] - 1u] =
          static_cast<std::uint8_t>(p + 1);
    }
  }
  kernels::descent_masks(rows, n, right);
  kernels::descent_masks(inverse_rows, n, left);
}

// Histogram of (partition index of the left descents, right-descent mask) over
// the permutations whose first value is `first`.
void sweep_first_value(int n, int first, const PartitionOrder& order, std::vector<std::uint64_t>& hist) {
  const std::size_t subsets = std::size_t{1} << (n - 1);
  constexpr std::size_t kBatch = 512;
  std::vector<std::uint8_t> rows(kBatch * kernels::kRowStride, 0);
  std::vector<std::uint8_t> inverse_rows(kBatch * kernels::kRowStride, 0);
  std::vector<std::uint32_t> right(kBatch), left(kBatch);
  std::vector<std::uint8_t> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != first) rest.push_back(static_cast<std::uint8_t>(v));
  }
  const auto& kt = kernels::active();
  std::size_t filled = 0;
  auto flush = [&] {
    kt.descent_masks(rows.data(), filled, n, right.data());
    kt.descent_masks(inverse_rows.data(), filled, n, left.data());
    for (std::size_t k = 0; k < filled; ++k) {
      ++hist[order.index_of_mask(left[k]) * subsets + right[k]];
    }
    filled = 0;
  };
  do {
    std::uint8_t* row = rows.data() + filled * kernels::kRowStride;
    std::uint8_t* inv = inverse_rows.data() + filled * kernels::kRowStride;
    row[0] = static_cast<std::uint8_t>(first);
    inv[first - 1] = 1;
    for (std::size_t p = 0; p < rest.size(); ++p) {
      row[p + 1] = rest[p];
      inv[rest[p] - 1u] = static_cast<std::uint8_t>(p + 2);
    }
    if (++filled == kBatch) flush();
  } while (std::next_permutation(rest.begin(), rest.end()));
  if (filled > 0) flush();
}

CountMatrix mbar_by_sweep(int n, const PartitionOrder& order) {
  const std::size_t classes = order.size();
  const std::size_t subsets = std::size_t{1} << (n - 1);
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(classes * subsets, 0));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int first = 1 + static_cast<int>(w); first <= n; first += static_cast<int>(workers)) {
          sweep_first_value(n, first, order, partial[w]);
        }
      });
    }
  }
  std::vector<std::uint64_t> hist(classes * subsets, 0);
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += part[k];
  }
  // Sum over supersets of each right-descent mask.
  for (std::size_t bit = 1; bit < subsets; bit <<= 1) {
    for (std::size_t c = 0; c < classes; ++c) {
      std::uint64_t* h = hist.data() + c * subsets;
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        if ((mask & bit) == 0) h[mask] += h[mask | bit];
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& p : order.partitions()) labels.push_back(to_string(p));
  CountMatrix m(MatrixKind::Mbar, n, std::move(labels));
  for (std::size_t r = 0; r < classes; ++r) {
    for (std::size_t c = 0; c < classes; ++c) {
      const std::uint32_t mu = set_of_partition(order[c]).bits();
      const std::uint64_t value = hist[r * subsets + mu];
      m.at(r, c) = Integer(static_cast<unsigned long>(value));
    }
  }
  return m;
}

// a(I, J) for all I at fixed J, sharing contingency counts keyed by sorted margins.
class ColumnSolver {
 public:
  explicit ColumnSolver(int n) : n_(n), subsets_(std::uint32_t{1} << (n - 1)) {
    for (std::uint32_t bits = 0; bits < subsets_; ++bits) {
      std::vector<int> parts = composition_of(DescentSet(n, bits)).parts();
      std::sort(parts.begin(), parts.end());
      sorted_.push_back(std::move(parts));
    }
  }

  std::vector<Integer> column(std::uint32_t j) {
    std::vector<Integer> values(subsets_);
    for (std::uint32_t bits = 0; bits < subsets_; ++bits) values[bits] = hat(bits, j);
    for (std::uint32_t bit = 1; bit < subsets_; bit <<= 1) {
      for (std::uint32_t bits = 0; bits < subsets_; ++bits) {
        if ((bits & bit) == 0) values[bits] -= values[bits | bit];
      }
    }
    return values;
  }

 private:
  const Integer& hat(std::uint32_t i, std::uint32_t j) {
    auto key = std::make_pair(sorted_[i], sorted_[j]);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, contingency_count(Composition(sorted_[i]), Composition(sorted_[j]))).first;
    }
    return it->second;
  }

  int n_;
  std::uint32_t subsets_;
  std::vector<std::vector<int>> sorted_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> cache_;
};

CountMatrix mbar_by_contingency(int n, const PartitionOrder& order) {
  ColumnSolver solver(n);
  const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
  std::vector<std::string> labels;
  for (const auto& p : order.partitions()) labels.push_back(to_string(p));
  CountMatrix m(MatrixKind::Mbar, n, std::move(labels));
  for (std::size_t c = 0; c < order.size(); ++c) {
    const std::vector<Integer> col = solver.column(set_of_partition(order[c]).bits());
    for (std::uint32_t bits = 0; bits < subsets; ++bits) m.at(order.index_of_mask(bits), c) += col[bits];
  }
  return m;
}

}  // namespace

std::string_view name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::M:
      return "M";
    case MatrixKind::Mprime:
      return "Mprime";
    case MatrixKind::Mbar:
      return "Mbar";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  for (MatrixKind kind : {MatrixKind::M, MatrixKind::Mprime, MatrixKind::Mbar}) {
    if (text == name(kind)) return kind;
  }
  throw std::invalid_argument("unknown matrix kind '" + std::string(text) + "' (expected M, Mprime or Mbar)");
}

CountMatrix::CountMatrix(MatrixKind kind, int n, std::vector<std::string> labels)
    : kind_(kind), n_(n), labels_(std::move(labels)), entries_(labels_.size() * labels_.size()) {}

CountMatrix CountMatrix::transposed() const {
  CountMatrix t(kind_, n_, labels_);
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::vector<std::vector<long long>> CountMatrix::to_rows() const {
  std::vector<std::vector<long long>> rows(size(), std::vector<long long>(size()));
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) {
      if (!at(r, c).fits_slong_p()) throw std::overflow_error("matrix entry exceeds 64 bits");
      rows[r][c] = at(r, c).get_si();
    }
  }
  return rows;
}

std::vector<std::string> NormalityMatrix::labels() const {
  std::vector<std::string> out;
  out.reserve(simples_.size());
  for (const auto& x : simples_) out.push_back(to_string(x));
  return out;
}

CountMatrix NormalityMatrix::to_count_matrix() const {
  CountMatrix m(MatrixKind::M, n_, labels());
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) {
      if (at(r, c)) m.at(r, c) = 1;
    }
  }
  return m;
}

NormalityMatrix build_M(int n, int cap) {
  check_cap("normality matrix", n, cap);
  NormalityMatrix m;
  m.n_ = n;
  m.simples_ = simple_enumeration(n);
  const std::size_t size = m.simples_.size();
  m.words_ = (size + 63) / 64;
  m.bits_.assign(size * m.words_, 0);
  std::vector<std::uint32_t> right, left;
  descent_masks_of(m.simples_, right, left);
  const auto& kt = kernels::active();
  for (std::size_t r = 0; r < size; ++r) {
    kt.normal_row_bits(right[r], left.data(), size, m.bits_.data() + r * m.words_);
  }
  return m;
}

StructuralReport structural_check_M(const NormalityMatrix& m) {
  StructuralReport report;
  report.n = m.n();
  const std::size_t size = m.size();
  const std::size_t last = size - 1;

  report.borders = true;
  for (std::size_t k = 0; k < size && report.borders; ++k) {
    report.borders = m.at(k, 0) && m.at(last, k) && (m.at(0, k) == (k == 0)) && (m.at(k, last) == (k == last));
  }

  report.stacked_blocks = true;
  if (m.n() > 1) {
    const NormalityMatrix previous = build_M(m.n() - 1, m.n() - 1);
    const std::size_t block = previous.size();
    for (std::size_t r = 0; r < size && report.stacked_blocks; ++r) {
      for (std::size_t c = 0; c < block; ++c) {
        if (m.at(r, c) != previous.at(r % block, c)) {
          report.stacked_blocks = false;
          break;
        }
      }
    }
  }

  report.descent_classes = true;
  std::unordered_map<std::uint32_t, std::size_t> row_class, col_class;
  for (std::size_t k = 0; k < size && report.descent_classes; ++k) {
    const auto [rit, rnew] = row_class.try_emplace(d_right(m.simples()[k]).bits(), k);
    if (!rnew) {
      auto a = m.row_bits(k);
      auto b = m.row_bits(rit->second);
      report.descent_classes = std::equal(a.begin(), a.end(), b.begin());
    }
    const auto [cit, cnew] = col_class.try_emplace(d_left(m.simples()[k]).bits(), k);
    if (!cnew && report.descent_classes) {
      for (std::size_t r = 0; r < size; ++r) {
        if (m.at(r, k) != m.at(r, cit->second)) {
          report.descent_classes = false;
          break;
        }
      }
    }
  }
  return report;
}

StructuralReport structural_check_M(int n, int cap) { return structural_check_M(build_M(n, cap)); }

CountMatrix build_Mprime(int n, int cap) {
  check_cap("descent-set matrix", n, cap);
  const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
  std::vector<std::string> labels;
  for (std::uint32_t bits = 0; bits < subsets; ++bits) labels.push_back(to_string(DescentSet(n, bits)));
  CountMatrix m(MatrixKind::Mprime, n, std::move(labels));
  ColumnSolver solver(n);
  for (std::uint32_t j = 0; j < subsets; ++j) {
    const std::vector<Integer> col = solver.column(j);
    for (std::uint32_t i = 0; i < subsets; ++i) m.at(i, j) = col[i];
  }
  return m;
}

CountMatrix build_Mbar(int n, MbarMethod method, const SizeCaps& caps) {
  check_cap("partition matrix", n, caps.mbar);
  const PartitionOrder order(n);
  if (method == MbarMethod::Auto) {
    method = n <= std::min(caps.mbar_sweep, kernels::kMaxPackedStrands) ? MbarMethod::Sweep
                                                                       : MbarMethod::Contingency;
  }
  if (method == MbarMethod::Sweep) {
    if (n > kernels::kMaxPackedStrands) {
      throw CapExceeded("permutation sweep supports at most 16 strands");
    }
    return mbar_by_sweep(n, order);
  }
  return mbar_by_contingency(n, order);
}

unsigned worker_count() {
  if (const char* env = std::getenv("GC_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 1024) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CountVector row_times(const CountVector& v, const CountMatrix& m) {
  if (v.size() != m.size()) throw std::invalid_argument("vector length does not match matrix size");
  CountVector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (sgn(v[r]) == 0) continue;
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (sgn(m.at(r, c)) != 0) out[c] += v[r] * m.at(r, c);
    }
  }
  return out;
}

CountVector row_times(const CountVector& v, const NormalityMatrix& m) {
  if (v.size() != m.size()) throw std::invalid_argument("vector length does not match matrix size");
  CountVector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (sgn(v[r]) == 0) continue;
    const auto bits = m.row_bits(r);
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word != 0) {
        const int b = std::countr_zero(word);
        out[w * 64 + static_cast<std::size_t>(b)] += v[r];
        word &= word - 1;
      }
    }
  }
  return out;
}

std::vector<CountVector> ones_orbit(const CountMatrix& m, int count) {
  std::vector<CountVector> orbit;
  if (count <= 0) return orbit;
  orbit.reserve(static_cast<std::size_t>(count));
  orbit.emplace_back(m.size(), Integer(1));
  for (int k = 1; k < count; ++k) orbit.push_back(row_times(orbit.back(), m));
  return orbit;
}

PartitionN delta_partition(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("delta index requires 1 <= r <= n");
  if (r == n) return PartitionN::ones(n);
  std::vector<int> parts{n - r};
  parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
  return PartitionN(std::move(parts));
}

Integer b_of_partition(int n, int d, const PartitionN& lambda) {
  return DegreeCounter(n, d).b_of_partition(d, lambda);
}

Integer b_of_simple(int n, int d, const Permutation& x, CountPath path, const SizeCaps& caps) {
  if (x.n() != n) throw std::invalid_argument("simple braid has the wrong strand count");
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  switch (path) {
    case CountPath::Mbar:
      return DegreeCounter(n, d, MbarMethod::Auto, caps).b_of_simple(d, x);
    case CountPath::MOnes:
    case CountPath::MLastRow: {
      const NormalityMatrix m = build_M(n, caps.m);
      const auto it = std::find(m.simples().begin(), m.simples().end(), x);
      const auto index = static_cast<std::size_t>(it - m.simples().begin());
      CountVector v(m.size());
      int steps = d - 1;
      if (path == CountPath::MOnes) {
        std::fill(v.begin(), v.end(), Integer(1));
      } else {
        v.back() = 1;
        steps = d;
      }
      for (int k = 0; k < steps; ++k) v = row_times(v, m);
      return v[index];
    }
    case CountPath::Mprime: {
      const CountMatrix m = build_Mprime(n, caps.mprime);
      CountVector v(m.size(), Integer(1));
      for (int k = 1; k < d; ++k) v = row_times(v, m);
      return v[d_left(x).bits()];
    }
  }
  throw std::invalid_argument("unknown count path");
}

Integer b_total(int n, int d) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  if (d == 0) return Integer(1);
  return DegreeCounter(n, d).b_total(d);
}

Integer b_delta(int n, int d, int r) { return DegreeCounter(n, d).b_delta(d, r); }

DegreeCounter::DegreeCounter(int n, int max_degree, MbarMethod method, const SizeCaps& caps)
    : n_(n), max_degree_(max_degree), order_(n), mbar_(build_Mbar(n, method, caps)) {
  if (max_degree < 1) throw std::invalid_argument("degree must be at least 1");
  orbit_ = ones_orbit(mbar_, max_degree + 1);
}

const CountVector& DegreeCounter::row(int d) const {
  if (d < 1 || d > max_degree_ + 1) {
    throw std::out_of_range("degree " + std::to_string(d) + " outside the precomputed range");
  }
  return orbit_[static_cast<std::size_t>(d - 1)];
}

Integer DegreeCounter::b_of_partition(int d, const PartitionN& lambda) const {
  return row(d)[order_.index_of(lambda)];
}

Integer DegreeCounter::b_of_simple(int d, const Permutation& x) const {
  if (x.n() != n_) throw std::invalid_argument("simple braid has the wrong strand count");
  return row(d)[order_.index_of_mask(d_left(x).bits())];
}

Integer DegreeCounter::b_total(int d) const {
  if (d == 0) return Integer(1);
  return row(d + 1)[order_.index_of(PartitionN::ones(n_))];
}

Integer DegreeCounter::b_delta(int d, int r) const { return b_of_partition(d, delta_partition(n_, r)); }

}  // namespace garside
