#include "garside/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace garside {

namespace {

void check_strands(int n) {
  if (n < 1 || n > kMaxStrands) {
    throw std::invalid_argument("strand count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxStrands) + "]");
  }
}

std::uint32_t range_mask(int n) {
  return n <= 1 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << (n - 1)) - 1);
}

}  // namespace

DescentSet::DescentSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  check_strands(n);
  if ((bits & ~range_mask(n)) != 0) {
    throw std::invalid_argument("descent set has members outside [1, n-1]");
  }
}

DescentSet DescentSet::from_members(int n, std::span<const int> members) {
  check_strands(n);
  std::uint32_t bits = 0;
  for (int i : members) {
    if (i < 1 || i > n - 1) {
      throw std::invalid_argument("descent index " + std::to_string(i) + " outside [1, " +
                                  std::to_string(n - 1) + "]");
    }
    bits |= std::uint32_t{1} << (i - 1);
  }
  return DescentSet(n, bits);
}

DescentSet DescentSet::full(int n) {
  check_strands(n);
  return DescentSet(n, range_mask(n));
}

DescentSet DescentSet::prefix(int n, int k) {
  check_strands(n);
  k = std::clamp(k, 0, n - 1);
  return DescentSet(n, range_mask(k + 1));
}

bool DescentSet::contains(int i) const {
  return i >= 1 && i < n_ && ((bits_ >> (i - 1)) & 1u) != 0;
}

bool DescentSet::includes(const DescentSet& other) const {
  return (other.bits_ & ~bits_) == 0;
}

int DescentSet::size() const { return std::popcount(bits_); }

std::vector<int> DescentSet::members() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

DescentSet DescentSet::complement() const { return DescentSet(n_, ~bits_ & range_mask(n_)); }

DescentSet DescentSet::mirrored() const {
  std::uint32_t bits = 0;
  for (int i = 1; i < n_; ++i) {
    if (contains(i)) bits |= std::uint32_t{1} << (n_ - i - 1);
  }
  return DescentSet(n_, bits);
}

std::string to_string(const DescentSet& set) {
  std::string out = "{";
  bool first = true;
  for (int i : set.members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Permutation::Permutation(std::span<const int> one_line) {
  const int n = static_cast<int>(one_line.size());
  check_strands(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  image_.reserve(one_line.size());
  for (int v : one_line) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [1, " + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
    image_.push_back(static_cast<std::uint8_t>(v));
  }
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

Permutation Permutation::identity(int n) {
  check_strands(n);
  std::vector<std::uint8_t> image(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) image[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p + 1);
  return Permutation(Unchecked{}, std::move(image));
}

Permutation Permutation::flip(int n) { return partial_flip(n, n); }

Permutation Permutation::partial_flip(int k, int n) {
  check_strands(n);
  if (k < 0 || k > n) throw std::invalid_argument("partial flip size outside [0, n]");
  std::vector<std::uint8_t> image(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    image[static_cast<std::size_t>(p - 1)] = static_cast<std::uint8_t>(p <= k ? k + 1 - p : p);
  }
  return Permutation(Unchecked{}, std::move(image));
}

Permutation Permutation::transposition(int i, int n) {
  check_strands(n);
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside [1, " +
                                std::to_string(n - 1) + "]");
  }
  Permutation t = identity(n);
  std::swap(t.image_[static_cast<std::size_t>(i - 1)], t.image_[static_cast<std::size_t>(i)]);
  return t;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < image_.size(); ++p) {
    if (image_[p] != p + 1) return false;
  }
  return true;
}

std::string to_string(const Permutation& f) {
  std::string out = "[";
  for (int p = 1; p <= f.n(); ++p) {
    if (p > 1) out += ',';
    out += std::to_string(f(p));
  }
  return out + "]";
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos >= text.size() || text[pos] != '[') throw std::invalid_argument("expected '['");
  ++pos;
  skip_space();
  if (pos < text.size() && text[pos] == ']') throw std::invalid_argument("empty permutation");
  while (true) {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("expected a positive integer at offset " + std::to_string(pos));
    }
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000) throw std::invalid_argument("permutation entry too large");
      ++pos;
    }
    values.push_back(v);
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    throw std::invalid_argument("expected ',' or ']' at offset " + std::to_string(pos));
  }
  skip_space();
  if (pos != text.size()) throw std::invalid_argument("trailing characters after ']'");
  return Permutation(values);
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("size mismatch: composing permutations of " + std::to_string(f.n()) +
                                " and " + std::to_string(g.n()) + " strands");
  }
  std::vector<std::uint8_t> image(g.image_.size());
  for (std::size_t p = 0; p < image.size(); ++p) image[p] = f.image_[g.image_[p] - 1u];
  return Permutation(Permutation::Unchecked{}, std::move(image));
}

Permutation inverse(const Permutation& f) {
  std::vector<std::uint8_t> image(f.image_.size());
  for (std::size_t p = 0; p < image.size(); ++p) {
    image[f.image_[p] - 1u] = static_cast<std::uint8_t>(p + 1);
  }
  return Permutation(Permutation::Unchecked{}, std::move(image));
}

int inversion_number(const Permutation& f) {
  int count = 0;
  for (int p = 1; p <= f.n(); ++p) {
    for (int q = p + 1; q <= f.n(); ++q) {
      if (f(p) > f(q)) ++count;
    }
  }
  return count;
}

DescentSet d_right(const Permutation& x) {
  std::uint32_t bits = 0;
  for (int i = 1; i < x.n(); ++i) {
    if (x(i) > x(i + 1)) bits |= std::uint32_t{1} << (i - 1);
  }
  return DescentSet(x.n(), bits);
}

DescentSet d_left(const Permutation& x) {
  // i is a descent of the inverse iff value i+1 sits to the left of value i.
  std::vector<int> position(static_cast<std::size_t>(x.n()) + 1);
  for (int p = 1; p <= x.n(); ++p) position[static_cast<std::size_t>(x(p))] = p;
  std::uint32_t bits = 0;
  for (int i = 1; i < x.n(); ++i) {
    if (position[static_cast<std::size_t>(i)] > position[static_cast<std::size_t>(i) + 1]) {
      bits |= std::uint32_t{1} << (i - 1);
    }
  }
  return DescentSet(x.n(), bits);
}

bool is_normal_pair(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("size mismatch in normality test");
  return d_right(x).includes(d_left(y));
}

Permutation sigma_in(int i, int n) {
  check_strands(n);
  if (i < 1 || i > n) throw std::invalid_argument("sigma_in index outside [1, n]");
  Permutation result = Permutation::identity(n);
  for (int j = i; j < n; ++j) result = compose(result, Permutation::transposition(j, n));
  return result;
}

std::vector<Permutation> simple_enumeration(int n) {
  check_strands(n);
  std::vector<Permutation> current{Permutation::identity(n)};
  for (int m = 2; m <= n; ++m) {
    // Entries of S_{m-1} are already embedded in n strands.
    std::vector<Permutation> next = current;
    next.reserve(current.size() * static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 1; --i) {
      Permutation prefix = Permutation::identity(n);
      for (int j = i; j < m; ++j) prefix = compose(prefix, Permutation::transposition(j, n));
      for (const Permutation& y : current) next.push_back(compose(prefix, y));
    }
    current = std::move(next);
  }
  return current;
}

Permutation phi(const Permutation& x) {
  const Permutation w0 = Permutation::flip(x.n());
  return compose(w0, compose(x, w0));
}

Permutation dual_left(const Permutation& x) { return compose(Permutation::flip(x.n()), inverse(x)); }

Permutation dual_right(const Permutation& x) { return compose(inverse(x), Permutation::flip(x.n())); }

}  // namespace garside
