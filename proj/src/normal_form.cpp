#include "garside/normal_form.hpp"

#include <cctype>

namespace garside {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  long number() {
    const std::size_t start = pos;
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", start);
    return value;
  }
};

void append_delta(int n, std::vector<int>& out) {
  for (int k = n; k >= 2; --k) {
    for (int i = 1; i < k; ++i) out.push_back(i);
  }
}

}  // namespace

PositiveWord parse_word(std::string_view text, int n) {
  if (n < 1 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  PositiveWord word{n, {}};
  Cursor c{text};
  c.skip_space();
  while (!c.done()) {
    const std::size_t start = c.pos;
    std::vector<int> unit;
    if (c.peek() == 'D') {
      ++c.pos;
      append_delta(n, unit);
    } else {
      if (c.peek() == 's') ++c.pos;
      const long index = c.number();
      if (index < 1 || index > n - 1) {
        throw std::out_of_range("generator index " + std::to_string(index) + " outside [1," + std::to_string(n - 1) +
                                "] in token at position " + std::to_string(start));
      }
      unit.push_back(static_cast<int>(index));
    }
    long exponent = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      const std::size_t at = c.pos;
      if (!c.done() && c.peek() == '-') throw ParseError("exponent must be positive", at);
      exponent = c.number();
      if (exponent < 1) throw ParseError("exponent must be positive", at);
    }
    if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek()))) {
      throw ParseError(std::string("unexpected character '") + c.peek() + "'", c.pos);
    }
    for (long e = 0; e < exponent; ++e) word.letters.insert(word.letters.end(), unit.begin(), unit.end());
    c.skip_space();
  }
  return word;
}

Permutation word_permutation(const PositiveWord& w) {
  Permutation p = Permutation::identity(w.n);
  for (int i : w.letters) p = compose(p, Permutation::transposition(i, w.n));
  return p;
}

long potential(std::span<const Permutation> factors) {
  long total = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) total += static_cast<long>(k + 1) * inversion_number(factors[k]);
  return total;
}

NormalSequence normalize_factors(int n, std::vector<Permutation> factors, const MoveObserver& observer) {
  for (const auto& f : factors) {
    if (f.n() != n) throw std::invalid_argument("factor has the wrong strand count");
  }
  bool clean = false;
  while (!clean) {
    clean = true;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      while (true) {
        const std::uint32_t pending = d_left(factors[k + 1]).bits() & ~d_right(factors[k]).bits();
        if (pending == 0) break;
        const int i = __builtin_ctz(pending) + 1;
        const Permutation t = Permutation::transposition(i, n);
        factors[k] = compose(factors[k], t);
        factors[k + 1] = compose(t, factors[k + 1]);
        clean = false;
        if (observer) observer(factors, k, i);
      }
    }
  }
  while (!factors.empty() && factors.back().is_identity()) factors.pop_back();
  return {n, std::move(factors)};
}

NormalSequence normalize(const PositiveWord& w, const MoveObserver& observer) {
  std::vector<Permutation> factors;
  factors.reserve(w.letters.size());
  for (int i : w.letters) factors.push_back(Permutation::transposition(i, w.n));
  return normalize_factors(w.n, std::move(factors), observer);
}

int degree(const NormalSequence& s) { return static_cast<int>(s.factors.size()); }

Permutation dth_factor(const NormalSequence& s, int d) {
  if (d < 1) throw std::invalid_argument("factor index must be at least 1");
  if (d > degree(s)) return Permutation::identity(s.n);
  return s.factors[static_cast<std::size_t>(d - 1)];
}

bool is_normal(const NormalSequence& s) {
  for (std::size_t k = 0; k + 1 < s.factors.size(); ++k) {
    if (!is_normal_pair(s.factors[k], s.factors[k + 1])) return false;
  }
  return s.factors.empty() || !s.factors.back().is_identity();
}

}  // namespace garside
