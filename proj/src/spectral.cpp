#include "garside/spectral.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <unordered_map>

#include "garside/kernels.hpp"

namespace garside {

IntPolynomial charpoly(std::span<const Integer> entries, std::size_t size) {
  if (entries.size() != size * size) throw std::invalid_argument("matrix entries do not form a square");
  auto at = [&](std::size_t r, std::size_t c) -> const Integer& { return entries[r * size + c]; };
  // Coefficients highest degree first, for the leading r x r principal block.
  std::vector<Integer> poly{Integer(1)};
  for (std::size_t r = 0; r < size; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S where R is the
    // row left of the diagonal and S the column above it.
    std::vector<Integer> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -at(r, r);
    std::vector<Integer> krylov(r);
    for (std::size_t i = 0; i < r; ++i) krylov[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += at(r, i) * krylov[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<Integer> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            if (sgn(at(i, j)) != 0) next[i] += at(i, j) * krylov[j];
          }
        }
        krylov = std::move(next);
      }
    }
    std::vector<Integer> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

IntPolynomial charpoly(const CountMatrix& m) { return charpoly(m.entries(), m.size()); }

namespace {

IntPolynomial compressed(std::size_t size, const std::vector<std::size_t>& class_of,
                         const std::vector<std::size_t>& representatives,
                         const std::function<Integer(std::size_t, std::size_t)>& entry) {
  const std::size_t classes = representatives.size();
  std::vector<Integer> folded(classes * classes);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t y = 0; y < size; ++y) folded[c * classes + class_of[y]] += entry(representatives[c], y);
  }
  return charpoly(folded, classes) * IntPolynomial::monomial(static_cast<unsigned>(size - classes));
}

}  // namespace

IntPolynomial charpoly_row_compressed(const CountMatrix& m) {
  std::map<std::vector<std::string>, std::size_t> seen;
  std::vector<std::size_t> class_of(m.size()), representatives;
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::vector<std::string> key;
    for (std::size_t c = 0; c < m.size(); ++c) key.push_back(m.at(r, c).get_str());
    auto [it, inserted] = seen.try_emplace(std::move(key), representatives.size());
    if (inserted) representatives.push_back(r);
    class_of[r] = it->second;
  }
  return compressed(m.size(), class_of, representatives,
                    [&](std::size_t r, std::size_t c) { return m.at(r, c); });
}

IntPolynomial charpoly(const NormalityMatrix& m) {
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  std::vector<std::size_t> class_of(m.size()), representatives;
  for (std::size_t r = 0; r < m.size(); ++r) {
    auto bits = m.row_bits(r);
    auto [it, inserted] = seen.try_emplace(std::vector<std::uint64_t>(bits.begin(), bits.end()),
                                           representatives.size());
    if (inserted) representatives.push_back(r);
    class_of[r] = it->second;
  }
  return compressed(m.size(), class_of, representatives,
                    [&](std::size_t r, std::size_t c) { return Integer(m.at(r, c) ? 1 : 0); });
}

NewFactorReport new_factor_report(int n, const IntPolynomial& previous, const IntPolynomial& current) {
  NewFactorReport report;
  report.n = n;
  report.previous = previous;
  report.current = current;
  report.expected_degree = static_cast<int>(Integer(partition_count(n) - partition_count(n - 1)).get_si());
  report.quotient = exact_quotient(current, previous);
  report.divides = report.quotient.has_value();
  if (report.divides) {
    const IntPolynomial& q = *report.quotient;
    report.degree_matches = q.degree() == report.expected_degree;
    report.nonzero_constant = sgn(q[0]) != 0;
    report.squarefree = is_squarefree(q);
    report.coprime_with_previous = gcd(q, previous).degree() == 0;
  }
  return report;
}

NewFactorReport new_factor_simple_roots(int n, const SizeCaps& caps) {
  if (n < 2) throw std::invalid_argument("the new-factor check needs n >= 2");
  const IntPolynomial previous = charpoly(build_Mbar(n - 1, MbarMethod::Auto, caps));
  const IntPolynomial current = charpoly(build_Mbar(n, MbarMethod::Auto, caps));
  return new_factor_report(n, previous, current);
}

DominantEigenvalue rho_max(const CountMatrix& m, double tol, int max_iterations) {
  const std::size_t size = m.size();
  std::vector<double> a(size * size);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sgn(m.entries()[k]) < 0) throw std::invalid_argument("power iteration expects a non-negative matrix");
    a[k] = m.entries()[k].get_d();
  }
  const auto& kt = kernels::active();
  std::vector<double> x(size, 1.0 / std::sqrt(static_cast<double>(size)));
  std::vector<double> y(size);
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int it = 1; it <= max_iterations; ++it) {
    kt.matvec(a.data(), size, size, x.data(), y.data());
    double rayleigh = 0.0;
    double norm = 0.0;
    for (std::size_t k = 0; k < size; ++k) {
      rayleigh += x[k] * y[k];
      norm += y[k] * y[k];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return {0.0, it};
    if (std::abs(rayleigh - previous) < tol) return {rayleigh, it};
    previous = rayleigh;
    for (std::size_t k = 0; k < size; ++k) x[k] = y[k] / norm;
  }
  throw NonConvergence("power iteration did not converge in " + std::to_string(max_iterations) + " steps");
}

double growth_ratio(double rho_n, double rho_previous, int n) { return rho_n / (n * rho_previous); }

bool recurrence_check(std::span<const Integer> seq, const IntPolynomial& p) {
  const IntPolynomial recurrence = strip_x_power(p);
  if (recurrence.is_zero()) throw std::invalid_argument("recurrence polynomial is zero");
  const auto order = static_cast<std::size_t>(recurrence.degree());
  if (seq.size() <= order) throw std::invalid_argument("sequence too short for the recurrence");
  for (std::size_t t = 0; t + order < seq.size(); ++t) {
    Integer sum = 0;
    for (std::size_t j = 0; j <= order; ++j) sum += recurrence.coefficients()[j] * seq[t + j];
    if (sgn(sum) != 0) return false;
  }
  return true;
}

}  // namespace garside
