#include "garside/closed_forms.hpp"

#include <map>
#include <stdexcept>

#include "garside/incidence.hpp"

namespace garside {

bool FormulaReport::passed() const {
  for (const auto& p : points) {
    if (!p.informational && !p.match) return false;
  }
  return true;
}

void FormulaReport::add(std::string at, Integer formula, Integer reference, std::string note) {
  const bool match = formula == reference;
  points.push_back({std::move(at), std::move(formula), std::move(reference), match, false, std::move(note)});
}

void FormulaReport::add_informational(std::string at, Integer formula, Integer reference, std::string note) {
  const bool match = formula == reference;
  points.push_back({std::move(at), std::move(formula), std::move(reference), match, true, std::move(note)});
}

namespace {

std::string point(int n) { return "n=" + std::to_string(n); }
std::string point(int n, int d) { return "n=" + std::to_string(n) + ",d=" + std::to_string(d); }

std::string span(const char* var, int lo, int hi) {
  return std::to_string(lo) + "<=" + var + "<=" + std::to_string(hi);
}

Integer pow2(int e) { return power(Integer(2), static_cast<unsigned>(e)); }

// All compositions of n, as the compositions of every subset of [1, n-1].
std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) out.push_back(composition_of(DescentSet(n, mask)));
  return out;
}

// Sum of n!/(p1!...pk!) over k-part compositions of n whose parts meet the given minima.
Integer multinomial_sum(int n, const std::vector<int>& minima) {
  Integer total = 0;
  for (const auto& c : compositions_of(n)) {
    if (c.length() != minima.size()) continue;
    bool ok = true;
    for (std::size_t j = 0; j < minima.size(); ++j) ok = ok && c.parts()[j] >= minima[j];
    if (ok) total += multinomial(c.parts());
  }
  return total;
}

}  // namespace

Integer b3_closed(int d, const PartitionN& lambda) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  if (lambda == PartitionN({1, 1, 1})) return 4 * pow2(d) - 3 * d - 4;
  if (lambda == PartitionN({2, 1})) return pow2(d) - 1;
  if (lambda == PartitionN({3})) return 1;
  throw std::invalid_argument("not a partition of 3: " + to_string(lambda));
}

Integer b3_total_closed(int d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  return 8 * pow2(d) - 3 * d - 7;
}

FormulaReport b3_report(int dmax) {
  FormulaReport report{"b3-closed", span("d", 1, dmax), {}};
  const DegreeCounter counter(3, dmax);
  for (int d = 1; d <= dmax; ++d) {
    for (const auto& lambda : counter.order().partitions()) {
      report.add(point(3, d) + ",x~" + to_string(lambda), b3_closed(d, lambda), counter.b_of_partition(d, lambda));
    }
    report.add(point(3, d) + ",total", b3_total_closed(d), counter.b_total(d));
  }
  return report;
}

std::vector<Integer> b4_recurrence(int dmax) {
  std::vector<Integer> u{Integer(1)};
  Integer before = 0;
  for (int d = 1; d <= dmax; ++d) {
    Integer next = 6 * u.back() - 3 * before + 32 * pow2(d) - 12 * d - 34;
    before = u.back();
    u.push_back(std::move(next));
  }
  return u;
}

FormulaReport b4_recurrence_check(int dmax) {
  if (dmax < 2) throw std::invalid_argument("dmax must be at least 2");
  FormulaReport report{"b4-recurrence", span("d", 1, dmax), {}};
  const auto u = b4_recurrence(dmax);
  const DegreeCounter counter(4, dmax);
  for (int d = 1; d <= dmax; ++d) report.add(point(4, d), u[static_cast<std::size_t>(d)], counter.b_total(d));
  return report;
}

std::vector<Integer> b_n2_recurrence(int nmax) {
  std::vector<Integer> b{Integer(1)};
  for (int n = 1; n <= nmax; ++n) {
    Integer sum = 0;
    for (int i = 0; i < n; ++i) {
      Integer c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(i));
      Integer term = c * c * b[static_cast<std::size_t>(i)];
      if ((n + i + 1) % 2 == 0) sum += term; else sum -= term;
    }
    b.push_back(std::move(sum));
  }
  return b;
}

FormulaReport b_n2_report(int nmax) {
  FormulaReport report{"bn2-recurrence", span("n", 1, nmax), {}};
  const auto b = b_n2_recurrence(nmax);
  for (int n = 1; n <= nmax; ++n) report.add(point(n, 2), b[static_cast<std::size_t>(n)], b_total(n, 2));
  return report;
}

namespace {

std::vector<Rational> gf_product(int order) {
  const auto b = b_n2_recurrence(order);
  std::vector<Rational> left, right;
  for (int n = 0; n <= order; ++n) {
    Integer f = factorial(static_cast<unsigned>(n));
    Integer sq = f * f;
    left.emplace_back(b[static_cast<std::size_t>(n)], sq);
    right.emplace_back(n % 2 == 0 ? Integer(1) : Integer(-1), sq);
  }
  std::vector<Rational> product(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    for (int i = 0; i <= n; ++i) product[static_cast<std::size_t>(n)] += left[static_cast<std::size_t>(i)] * right[static_cast<std::size_t>(n - i)];
  }
  for (auto& c : product) c.canonicalize();
  return product;
}

}  // namespace

bool gf_identity_check(int order) {
  const auto product = gf_product(order);
  if (product[0] != 1) return false;
  for (std::size_t n = 1; n < product.size(); ++n) {
    if (sgn(product[n]) != 0) return false;
  }
  return true;
}

Integer b_n2_delta(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
  return factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n - r));
}

FormulaReport b_n2_delta_report(int nmax) {
  FormulaReport report{"bn2-delta", span("r", 1, nmax) + "," + span("n", 1, nmax), {}};
  for (int n = 1; n <= nmax; ++n) {
    const DegreeCounter counter(n, 2);
    for (int r = 1; r <= n; ++r) {
      report.add(point(n, 2) + ",r=" + std::to_string(r), b_n2_delta(n, r), counter.b_delta(2, r));
    }
  }
  return report;
}

Integer b_n3_delta1(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  return pow2(n) - 1;
}

Integer b_n3_delta1_printed(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  return pow2(n - 1);
}

FormulaReport b_n3_delta1_report(int nmax) {
  FormulaReport report{"bn3-delta1", span("n", 2, nmax), {}};
  for (int n = 2; n <= nmax; ++n) {
    const Integer pipeline = DegreeCounter(n, 3).b_delta(3, 1);
    report.add(point(n, 3), b_n3_delta1(n), pipeline);
    report.add_informational(point(n, 3) + ",printed", b_n3_delta1_printed(n), pipeline, "paper-discrepancy: printed 2^(n-1)");
  }
  return report;
}

Integer b_n3_delta2(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  return 2 * power(Integer(3), static_cast<unsigned>(n)) - (n + 6) * pow2(n - 1) + 1;
}

Integer b_n3_delta2_sums_printed(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  return b_n3_delta1(n) + multinomial_sum(n, {1, 1, 1}) + multinomial_sum(n, {1, 1}) + multinomial_sum(n, {1, 2, 1});
}

Integer b_n3_delta2_sums(int n) {
  // A two-block left-descent set with both blocks of size >= 2 admits two
  // second factors (the final crossing can sit in either block), not one.
  return b_n3_delta2_sums_printed(n) + multinomial_sum(n, {2, 2});
}

FormulaReport b_n3_delta2_report(int nmax) {
  FormulaReport report{"bn3-delta2", span("n", 3, nmax), {}};
  for (int n = 3; n <= nmax; ++n) {
    const Integer pipeline = DegreeCounter(n, 3).b_delta(3, 2);
    report.add(point(n, 3) + ",closed", b_n3_delta2(n), pipeline);
    report.add(point(n, 3) + ",sums", b_n3_delta2_sums(n), pipeline);
    report.add_informational(point(n, 3) + ",sums-printed", b_n3_delta2_sums_printed(n), pipeline,
                             "paper-discrepancy: printed sums omit the p1,p2>=2 two-block term");
  }
  return report;
}

Integer b_n4_delta1(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const Integer nf = factorial(static_cast<unsigned>(n));
  Integer sum = 0;
  for (int i = 0; i < n; ++i) sum += nf / factorial(static_cast<unsigned>(i));
  return sum;
}

Integer b_n4_delta1_compositions(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  Integer sum = 0;
  for (const auto& c : compositions_of(n)) {
    const auto& p = c.parts();
    Integer weight = 1;
    if (p.size() == 1) {
      weight = n;
    } else {
      weight = p.front() * p.back();
      for (std::size_t j = 1; j + 1 < p.size(); ++j) weight *= p[j] - 1;
    }
    sum += multinomial(p) * weight;
  }
  return sum;
}

FormulaReport b_n4_delta1_report(int nmax, int pipeline_nmax) {
  FormulaReport report{"bn4-delta1", span("n", 1, nmax), {}};
  for (int n = 1; n <= nmax; ++n) {
    const Integer closed = b_n4_delta1(n);
    report.add(point(n, 4) + ",compositions", closed, b_n4_delta1_compositions(n));
    if (n <= pipeline_nmax) report.add(point(n, 4) + ",pipeline", closed, DegreeCounter(n, 4).b_delta(4, 1));
  }
  return report;
}

namespace {

Rational f_sum(int i) {
  Rational sum = 0;
  for (const auto& c : compositions_of(i + 1)) {
    const auto& p = c.parts();
    Rational term = 1;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const int numerator = j + 1 == p.size() ? p[j] : p[j] - 1;
      term *= Rational(Integer(numerator), factorial(static_cast<unsigned>(p[j])));
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

}  // namespace

bool f_identity_check(int imax) {
  for (int i = 0; i <= imax; ++i) {
    if (f_sum(i) != 1) return false;
  }
  return true;
}

FormulaReport f_identity_report(int imax) {
  FormulaReport report{"f-identity", span("i", 0, imax), {}};
  for (int i = 0; i <= imax; ++i) {
    const Rational s = f_sum(i);
    // Recorded as integers: the sum itself when integral, otherwise its numerator
    // with a note, so a non-integral value can never match 1.
    if (s.get_den() == 1) {
      report.add("i=" + std::to_string(i), s.get_num(), Integer(1));
    } else {
      report.add("i=" + std::to_string(i), s.get_num(), Integer(1), "non-integral sum " + s.get_str());
      report.points.back().match = false;
    }
  }
  return report;
}

Integer floor_e_identity(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const unsigned terms = static_cast<unsigned>(n) + 20;
  const Integer nf = factorial(static_cast<unsigned>(n));
  // sum_{k<=K} 1/k! < e < sum_{k<=K} 1/k! + 1/(K! K)
  Rational lower = 0;
  for (unsigned k = 0; k <= terms; ++k) lower += Rational(Integer(1), factorial(k));
  const Rational upper = lower + Rational(Integer(1), factorial(terms) * terms);
  auto floor_of = [&](const Rational& e) {
    Rational scaled = e * nf;
    scaled.canonicalize();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return q;
  };
  const Integer lo = floor_of(lower);
  if (lo != floor_of(upper)) throw std::logic_error("enclosure of e too wide");
  return lo - 1;
}

FormulaReport floor_e_report(int nmax) {
  FormulaReport report{"floor-e", span("n", 1, nmax), {}};
  for (int n = 1; n <= nmax; ++n) report.add(point(n), floor_e_identity(n), b_n4_delta1(n));
  return report;
}

FormulaReport cor47_check(int nmax) {
  if (nmax < 2) throw std::invalid_argument("nmax must be at least 2");
  FormulaReport report{"bn4-recurrence", span("n", 1, nmax), {}};
  Integer printed = 1;
  Integer derived = 1;
  for (int n = 1; n <= nmax; ++n) {
    if (n > 1) {
      printed = n * printed + 2 * n - 1;
      derived = n * derived + n;
    }
    const Integer target = b_n4_delta1(n);
    report.add(point(n) + ",+n", derived, target);
    report.add_informational(point(n) + ",printed", printed, target, "paper-discrepancy: printed +2n-1");
  }
  return report;
}

std::vector<std::string> formula_ids() {
  return {"b3-closed", "b4-recurrence", "bn2-recurrence", "bn2-gf", "bn2-delta", "bn3-delta1",
          "bn3-delta2", "bn4-delta1", "bn4-recurrence", "f-identity", "floor-e"};
}

FormulaReport formula_report(const std::string& id, int nmax, int dmax) {
  if (id == "b3-closed") return b3_report(dmax);
  if (id == "b4-recurrence") return b4_recurrence_check(dmax);
  if (id == "bn2-recurrence") return b_n2_report(nmax);
  if (id == "bn2-gf") {
    FormulaReport report{"bn2-gf", span("order", 0, nmax), {}};
    const auto product = gf_product(nmax);
    for (int n = 0; n <= nmax; ++n) {
      const Rational& c = product[static_cast<std::size_t>(n)];
      report.add("order=" + std::to_string(n), c.get_den() == 1 ? Integer(c.get_num()) : Integer(-1),
                 Integer(n == 0 ? 1 : 0), c.get_den() == 1 ? "" : "non-integral " + c.get_str());
    }
    return report;
  }
  if (id == "bn2-delta") return b_n2_delta_report(nmax);
  if (id == "bn3-delta1") return b_n3_delta1_report(nmax);
  if (id == "bn3-delta2") return b_n3_delta2_report(nmax);
  if (id == "bn4-delta1") return b_n4_delta1_report(nmax, nmax);
  if (id == "bn4-recurrence") return cor47_check(nmax);
  if (id == "f-identity") return f_identity_report(nmax);
  if (id == "floor-e") return floor_e_report(nmax);
  throw std::invalid_argument("unknown formula id: " + id);
}

}  // namespace garside
