// garside-census: counting tables, incidence matrices, characteristic
// polynomials and normal forms of positive braids.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "garside/closed_forms.hpp"
#include "garside/incidence.hpp"
#include "garside/normal_form.hpp"
#include "garside/oracle.hpp"
#include "garside/reference_values.hpp"
#include "garside/serialize.hpp"
#include "garside/spectral.hpp"

using namespace garside;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "plain";
  std::string out;
  int cap_factorial = SizeCaps{}.m;
  std::uint64_t budget = kDefaultBruteBudget;
};

struct Result {
  std::string text;
  int code = kExitOk;
};

SizeCaps caps_of(const Options& o) {
  SizeCaps caps;
  caps.m = o.cap_factorial;
  return caps;
}

// --last accepts a permutation "[3,1,2]" or "delta r" (Delta_{n-r}).
std::optional<Permutation> last_factor(const std::vector<std::string>& spec, int n) {
  if (spec.empty()) return std::nullopt;
  if (spec[0] == "delta") {
    if (spec.size() != 2) throw std::invalid_argument("--last delta needs r");
    const int r = std::stoi(spec[1]);
    if (r < 1 || r > n) throw std::invalid_argument("--last delta r needs 1 <= r <= n");
    return Permutation::partial_flip(n - r, n);
  }
  if (spec.size() != 1) throw std::invalid_argument("--last takes a permutation or 'delta r'");
  Permutation x = parse_permutation(spec[0]);
  if (x.n() != n) throw std::invalid_argument("--last permutation has the wrong strand count");
  return x;
}

std::string row_label(int n, int k) {
  return k == 1 ? "b_{" + std::to_string(n) + ",d}(1)"
                : "b_{" + std::to_string(n) + ",d}(D_" + std::to_string(k) + ")";
}

const reference::CountRow* published_row(int n, int k) {
  for (const auto& row : reference::count_table()) {
    if (row.n == n && row.k == k) return &row;
  }
  return nullptr;
}

Result cmd_table(const Options& o, int nmax, int dmax) {
  const Format format = parse_format(o.format);
  json rows = json::array();
  std::ostringstream plain, csv;
  csv << "label,n,k";
  for (int d = 1; d <= dmax; ++d) csv << ",d" << d;
  csv << ",flags\n";
  int code = kExitOk;
  for (int n = 2; n <= nmax; ++n) {
    const DegreeCounter counter(n, dmax, MbarMethod::Auto, caps_of(o));
    for (int k = 1; k < n; ++k) {
      const auto* published = published_row(n, k);
      json flags = json::array();
      if (published && published->label_discrepancy) {
        flags.push_back({{"flag", "paper-discrepancy"}, {"printed_label", published->printed_label}});
      }
      std::vector<std::string> values;
      for (int d = 1; d <= dmax; ++d) {
        const Integer v = counter.b_of_partition(d, delta_partition(n, n - k));
        values.push_back(v.get_str());
        if (!published || d > static_cast<int>(published->values.size())) continue;
        const Integer printed(std::to_string(published->values[static_cast<std::size_t>(d - 1)]));
        if (auto note = reference::cell_discrepancy(n, k, d)) {
          flags.push_back({{"flag", "paper-discrepancy"}, {"d", d}, {"printed", printed.get_str()}, {"note", *note}});
        } else if (printed != v) {
          flags.push_back({{"flag", "mismatch"}, {"d", d}, {"printed", printed.get_str()}});
          code = kExitMismatch;
        }
      }
      const std::string label = row_label(n, k);
      rows.push_back({{"label", label}, {"n", n}, {"k", k}, {"values", values}, {"flags", flags}});
      plain << std::left << std::setw(14) << label << std::right;
      for (const auto& v : values) plain << ' ' << std::setw(14) << v;
      if (!flags.empty()) plain << "  *";
      plain << '\n';
      csv << csv_field(label) << ',' << n << ',' << k;
      for (const auto& v : values) csv << ',' << v;
      std::string fl;
      for (const auto& f : flags) {
        if (!fl.empty()) fl += ';';
        fl += f["flag"].get<std::string>();
        if (f.contains("d")) fl += "@d" + std::to_string(f["d"].get<int>());
      }
      csv << ',' << fl << '\n';
    }
  }
  if (format == Format::Json) return {json{{"rows", rows}}.dump(2) + "\n", code};
  if (format == Format::Csv) return {csv.str(), code};
  for (const auto& r : rows) {
    for (const auto& f : r["flags"]) {
      plain << "* " << r["label"].get<std::string>() << ": " << f["flag"].get<std::string>();
      if (f.contains("d")) plain << " at d=" << f["d"].get<int>() << ", printed " << f["printed"].get<std::string>();
      if (f.contains("printed_label")) plain << ", printed label " << f["printed_label"].get<std::string>();
      if (f.contains("note")) plain << " (" << f["note"].get<std::string>() << ')';
      plain << '\n';
    }
  }
  return {plain.str(), code};
}

Result cmd_conjecture(const Options& o, int nmax) {
  const Format format = parse_format(o.format);
  SizeCaps caps = caps_of(o);
  std::vector<IntPolynomial> polys;
  for (int n = 1; n <= nmax; ++n) polys.push_back(charpoly(build_Mbar(n, MbarMethod::Auto, caps)));
  json doc = json::array();
  std::ostringstream plain, csv;
  csv << "n,divides,quotient,degree,expected_degree,squarefree,nonzero_constant,coprime\n";
  int code = kExitOk;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (int n = 2; n <= nmax; ++n) {
    const auto r = new_factor_report(n, polys[static_cast<std::size_t>(n - 2)], polys[static_cast<std::size_t>(n - 1)]);
    if (!r.passed()) code = kExitMismatch;
    const std::string q = r.quotient ? to_string(*r.quotient) : "-";
    const int deg = r.quotient ? r.quotient->degree() : -1;
    doc.push_back({{"n", n}, {"divides", r.divides}, {"quotient", q}, {"degree", deg},
                   {"expected_degree", r.expected_degree}, {"squarefree", r.squarefree},
                   {"nonzero_constant", r.nonzero_constant}, {"coprime", r.coprime_with_previous},
                   {"passed", r.passed()}});
    plain << "n=" << n << "  divides=" << yn(r.divides) << "  degree=" << deg << '/' << r.expected_degree
          << "  squarefree=" << yn(r.squarefree) << "  Q(0)!=0=" << yn(r.nonzero_constant)
          << "  coprime=" << yn(r.coprime_with_previous) << "  Q=" << q << '\n';
    csv << n << ',' << r.divides << ',' << csv_field(q) << ',' << deg << ',' << r.expected_degree << ','
        << r.squarefree << ',' << r.nonzero_constant << ',' << r.coprime_with_previous << '\n';
  }
  if (format == Format::Json) return {doc.dump(2) + "\n", code};
  if (format == Format::Csv) return {csv.str(), code};
  return {plain.str(), code};
}

std::string render_count(Format format, const std::string& what, const Integer& value) {
  if (format == Format::Json) return json{{"query", what}, {"value", value.get_str()}}.dump(2) + "\n";
  if (format == Format::Csv) return "query,value\n" + csv_field(what) + "," + value.get_str() + "\n";
  return value.get_str() + "\n";
}

Result cmd_count(const Options& o, int n, int d, const std::vector<std::string>& last, const std::string& path) {
  const Format format = parse_format(o.format);
  const auto x = last_factor(last, n);
  if (d < 0 || (x && d < 1)) throw std::invalid_argument("degree out of range");
  std::string what = "b_{" + std::to_string(n) + "," + std::to_string(d) + "}";
  if (!x) return {render_count(format, what, b_total(n, d))};
  static const std::map<std::string, CountPath> paths = {
      {"mbar", CountPath::Mbar}, {"m", CountPath::MOnes}, {"m-last", CountPath::MLastRow}, {"mprime", CountPath::Mprime}};
  const auto it = paths.find(path);
  if (it == paths.end()) throw std::invalid_argument("unknown path: " + path);
  what += "(" + to_string(*x) + ")";
  return {render_count(format, what, b_of_simple(n, d, *x, it->second, caps_of(o)))};
}

CountMatrix matrix_of(MatrixKind kind, int n, const SizeCaps& caps) {
  switch (kind) {
    case MatrixKind::M: return build_M(n, caps.m).to_count_matrix();
    case MatrixKind::Mprime: return build_Mprime(n, caps.mprime);
    case MatrixKind::Mbar: return build_Mbar(n, MbarMethod::Auto, caps);
  }
  throw std::invalid_argument("unknown matrix kind");
}

Result cmd_matrix(const Options& o, const std::string& kind, int n) {
  return {render(matrix_of(parse_matrix_kind(kind), n, caps_of(o)), parse_format(o.format))};
}

Result cmd_charpoly(const Options& o, int n, const std::string& kind_text, bool raw_only, bool factored_only) {
  const Format format = parse_format(o.format);
  const SizeCaps caps = caps_of(o);
  const MatrixKind kind = parse_matrix_kind(kind_text);
  const IntPolynomial p = kind == MatrixKind::M ? charpoly(build_M(n, caps.m))
                          : kind == MatrixKind::Mprime ? charpoly_row_compressed(build_Mprime(n, caps.mprime))
                                                       : charpoly(build_Mbar(n, MbarMethod::Auto, caps));
  // Factor against the chain of partition-matrix quotients.
  std::vector<IntPolynomial> factors;
  IntPolynomial previous = IntPolynomial::constant(1);
  bool chain_ok = true;
  for (int k = 1; k <= n && chain_ok; ++k) {
    const IntPolynomial current = charpoly(build_Mbar(k, MbarMethod::Auto, caps));
    const auto q = exact_quotient(current, previous);
    chain_ok = q.has_value();
    if (q) factors.push_back(*q);
    previous = current;
  }
  std::string factored;
  const int shift = p.degree() - previous.degree();
  if (chain_ok && p == previous * IntPolynomial::monomial(static_cast<unsigned>(shift))) {
    if (shift > 0) factored = "x^" + std::to_string(shift);
    for (const auto& f : factors) factored += (factored.empty() ? "" : " * ") + ("(" + to_string(f) + ")");
  }
  const std::string raw = coefficient_list(p);
  if (format == Format::Json) {
    json doc = {{"n", n}, {"kind", std::string(name(kind))}, {"degree", p.degree()}};
    if (!factored_only) doc["coefficients"] = [&] {
      json c = json::array();
      for (const auto& v : p.coefficients()) c.push_back(v.get_str());
      return c;
    }();
    if (!raw_only && !factored.empty()) doc["factored"] = factored;
    return {doc.dump(2) + "\n"};
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "n,kind,form,value\n";
    if (!factored_only) out << n << ',' << name(kind) << ",raw," << csv_field(raw) << '\n';
    if (!raw_only && !factored.empty()) out << n << ',' << name(kind) << ",factored," << csv_field(factored) << '\n';
    return {out.str()};
  }
  if (!factored_only) out << raw << '\n';
  if (!raw_only) out << (factored.empty() ? to_string(p) : factored) << '\n';
  return {out.str()};
}

Result cmd_normalize(const Options& o, int n, const std::string& word, bool as_json) {
  const Format format = as_json ? Format::Json : parse_format(o.format);
  const NormalSequence s = normalize(parse_word(word, n));
  if (format == Format::Json) {
    json factors = json::array();
    for (const auto& f : s.factors) {
      factors.push_back({{"permutation", to_string(f)}, {"left", to_string(d_left(f))}, {"right", to_string(d_right(f))}});
    }
    return {json{{"n", n}, {"degree", degree(s)}, {"factors", factors}}.dump(2) + "\n"};
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "k,permutation,left,right\n";
    for (std::size_t k = 0; k < s.factors.size(); ++k) {
      const auto& f = s.factors[k];
      out << k + 1 << ',' << csv_field(to_string(f)) << ',' << csv_field(to_string(d_left(f))) << ','
          << csv_field(to_string(d_right(f))) << '\n';
    }
    return {out.str()};
  }
  out << "degree " << degree(s) << '\n';
  for (std::size_t k = 0; k < s.factors.size(); ++k) {
    const auto& f = s.factors[k];
    out << k + 1 << ": " << to_string(f) << "  left " << to_string(d_left(f)) << "  right " << to_string(d_right(f)) << '\n';
  }
  return {out.str()};
}

Result cmd_oracle(const Options& o, int n, int d, const std::vector<std::string>& last, const std::string& engine) {
  const Format format = parse_format(o.format);
  LastFactor constraint;
  std::string what = "b_{" + std::to_string(n) + "," + std::to_string(d) + "}";
  if (auto x = last_factor(last, n)) {
    constraint = *x;
    what += "(" + to_string(*x) + ")";
  }
  Integer value;
  if (engine == "brute") {
    value = brute_count(n, d, constraint, o.budget);
  } else if (engine == "dp") {
    value = dp_count(n, d, constraint);
  } else {
    throw std::invalid_argument("unknown engine: " + engine);
  }
  return {render_count(format, what + " [" + engine + "]", value)};
}

Result cmd_verify(const Options& o, const std::vector<std::string>& ids, int nmax, int dmax) {
  std::vector<FormulaReport> reports;
  for (const auto& id : ids.empty() ? formula_ids() : ids) reports.push_back(formula_report(id, nmax, dmax));
  int code = kExitOk;
  for (const auto& r : reports) {
    if (!r.passed()) code = kExitMismatch;
  }
  return {render(reports, parse_format(o.format)), code};
}

Result cmd_eigen(const Options& o, int nmax, double tol) {
  const Format format = parse_format(o.format);
  json doc = json::array();
  std::ostringstream plain, csv;
  csv << "n,rho,ratio,iterations\n";
  double previous = 0.0;
  for (int n = 1; n <= nmax; ++n) {
    const auto r = rho_max(build_Mbar(n, MbarMethod::Auto, caps_of(o)), tol);
    std::optional<double> ratio;
    if (n > 1) ratio = growth_ratio(r.value, previous, n);
    previous = r.value;
    json item = {{"n", n}, {"rho", r.value}, {"iterations", r.iterations}};
    if (ratio) item["ratio"] = *ratio;
    doc.push_back(std::move(item));
    plain << "n=" << n << "  rho=" << std::fixed << std::setprecision(3) << r.value;
    if (ratio) plain << "  ratio=" << *ratio;
    plain << '\n';
    csv << n << ',' << std::setprecision(9) << r.value << ',' << (ratio ? std::to_string(*ratio) : "") << ','
        << r.iterations << '\n';
  }
  if (format == Format::Json) return {doc.dump(2) + "\n"};
  if (format == Format::Csv) return {csv.str()};
  return {plain.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting combinatorics of the normal form of positive braids"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--out", opts.out, "Write output to FILE");
  app.add_option("--cap-factorial", opts.cap_factorial, "Largest n for n!-sized matrices")->check(CLI::Range(1, 10));
  app.add_option("--budget", opts.budget, "Tuple budget of the brute-force oracle");

  int nmax = 6, dmax = 6, n = 0, d = 0;
  std::vector<std::string> last;
  std::string path = "mbar", kind = "Mbar", word, engine = "dp";
  std::vector<std::string> formulas;
  bool raw = false, factored = false, as_json = false;
  double tol = 1e-9;

  auto* table = app.add_subcommand("table", "Degree counts b_{n,d}(Delta_k)");
  table->add_option("--nmax", nmax)->check(CLI::Range(2, 10));
  table->add_option("--dmax", dmax)->check(CLI::Range(1, 1000));

  auto* conjecture = app.add_subcommand("conjecture", "Nested characteristic polynomials of the partition matrices");
  int conj_nmax = 8;
  conjecture->add_option("--nmax", conj_nmax)->check(CLI::Range(2, 12));

  auto* count = app.add_subcommand("count", "b_{n,d} or b_{n,d}(x)");
  count->add_option("n", n)->required()->check(CLI::Range(1, 12));
  count->add_option("d", d)->required()->check(CLI::Range(0, 1000));
  count->add_option("--last", last, "Permutation, or 'delta r' for Delta_{n-r}")->expected(1, 2);
  count->add_option("--path", path, "mbar, m, m-last or mprime");

  auto* matrix = app.add_subcommand("matrix", "Emit M, Mprime or Mbar");
  matrix->add_option("kind", kind)->required()->check(CLI::IsMember({"M", "Mprime", "Mbar"}));
  matrix->add_option("n", n)->required()->check(CLI::Range(1, 12));

  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial");
  cp->add_option("n", n)->required()->check(CLI::Range(1, 12));
  cp->add_option("--kind", kind)->check(CLI::IsMember({"M", "Mprime", "Mbar"}));
  auto* raw_flag = cp->add_flag("--raw", raw, "Coefficient list only");
  cp->add_flag("--factored", factored, "Factored form only")->excludes(raw_flag);

  auto* norm = app.add_subcommand("normalize", "Normal form of a positive word");
  int strands = 0;
  norm->add_option("-n", strands, "Strand count")->required()->check(CLI::Range(1, kMaxStrands));
  norm->add_option("word", word)->required();
  norm->add_flag("--json", as_json);

  auto* oracle = app.add_subcommand("oracle", "Brute-force or transfer count");
  oracle->add_option("n", n)->required()->check(CLI::Range(1, 8));
  oracle->add_option("d", d)->required()->check(CLI::Range(1, 100));
  oracle->add_option("--last", last)->expected(1, 2);
  oracle->add_option("--engine", engine)->check(CLI::IsMember({"brute", "dp"}));

  auto* verify = app.add_subcommand("verify", "Closed forms against the matrix pipeline");
  int verify_nmax = 8, verify_dmax = 20;
  verify->add_option("--formula", formulas)->check(CLI::IsMember(formula_ids()));
  verify->add_option("--nmax", verify_nmax)->check(CLI::Range(3, 12));
  verify->add_option("--dmax", verify_dmax)->check(CLI::Range(2, 1000));

  auto* eigen = app.add_subcommand("eigen", "Dominant eigenvalues of the partition matrices");
  int eigen_nmax = 8;
  eigen->add_option("--nmax", eigen_nmax)->check(CLI::Range(1, 12));
  eigen->add_option("--tol", tol)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Result result;
  try {
    if (*table) result = cmd_table(opts, nmax, dmax);
    else if (*conjecture) result = cmd_conjecture(opts, conj_nmax);
    else if (*count) result = cmd_count(opts, n, d, last, path);
    else if (*matrix) result = cmd_matrix(opts, kind, n);
    else if (*cp) result = cmd_charpoly(opts, n, kind, raw, factored);
    else if (*norm) result = cmd_normalize(opts, strands, word, as_json);
    else if (*oracle) result = cmd_oracle(opts, n, d, last, engine);
    else if (*verify) result = cmd_verify(opts, formulas, verify_nmax, verify_dmax);
    else if (*eigen) result = cmd_eigen(opts, eigen_nmax, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opts.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream file(opts.out);
    if (!file) {
      std::cerr << "error: cannot write " << opts.out << '\n';
      return kExitUsage;
    }
    file << result.text;
  }
  return result.code;
}
