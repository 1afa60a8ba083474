#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace garside {

/// Largest strand count handled by the descent-set representation
/// (indices 1..31 fit in a 32-bit mask).
inline constexpr int kMaxStrands = 32;

/// A subset of [1, n-1]. Index i is stored as bit i-1, so the integer value of
/// bits() enumerates subsets in binary-counting order: {}, {1}, {2}, {1,2}, {3}, ...
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int n, std::uint32_t bits);

  static DescentSet from_members(int n, std::span<const int> members);
  static DescentSet empty(int n) { return DescentSet(n, 0); }
  /// The whole range [1, n-1].
  static DescentSet full(int n);
  /// The range [1, k] (empty when k <= 0).
  static DescentSet prefix(int n, int k);

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(int i) const;
  bool includes(const DescentSet& other) const;
  int size() const;
  std::vector<int> members() const;
  /// Complement inside [1, n-1].
  DescentSet complement() const;
  /// i -> n - i, the image under conjugation by the flip.
  DescentSet mirrored() const;

  bool operator==(const DescentSet&) const = default;

 private:
  int n_ = 1;
  std::uint32_t bits_ = 0;
};

/// Sorted brace list, e.g. "{1,2}" or "{}".
std::string to_string(const DescentSet& set);

/// A permutation of [1, n] in one-line notation: image(p) is the starting
/// position of the strand that ends at position p. Under this convention the
/// map from positive braids is a homomorphism for (f g)(p) = f(g(p)), and every
/// permutation is the image of exactly one simple braid.
class Permutation {
 public:
  Permutation() : image_{1} {}
  /// Values are 1-based; throws std::invalid_argument unless a bijection of [1, n].
  explicit Permutation(std::span<const int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(int n);
  /// [n, n-1, ..., 1], the permutation of the fundamental braid.
  static Permutation flip(int n);
  /// The transposition (i, i+1), image of the generator sigma_i.
  static Permutation transposition(int i, int n);
  /// The flip of the first k strands, identity on the rest: the fundamental
  /// braid on k strands embedded in n strands.
  static Permutation partial_flip(int k, int n);

  int n() const { return static_cast<int>(image_.size()); }
  /// 1-based access: image(p) for p in [1, n].
  int operator()(int p) const { return image_[static_cast<std::size_t>(p - 1)]; }
  std::span<const std::uint8_t> one_line() const { return image_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint8_t> image) : image_(std::move(image)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<std::uint8_t> image_;
};

/// Bracketed one-line notation, e.g. "[3,4,1,2]".
std::string to_string(const Permutation& f);
/// Inverse of to_string; accepts optional whitespace. Throws std::invalid_argument.
Permutation parse_permutation(std::string_view text);

/// (f g)(p) = f(g(p)). Throws std::invalid_argument on mismatched n.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
int inversion_number(const Permutation& f);

/// Indices i with f(i) > f(i+1): the sigma_i that divide the simple braid on the right.
DescentSet d_right(const Permutation& x);
/// Descents of the inverse: the sigma_i that divide the simple braid on the left.
DescentSet d_left(const Permutation& x);

/// (x, y) is normal iff every left divisor sigma_i of y divides x on the right.
bool is_normal_pair(const Permutation& x, const Permutation& y);

/// Permutation of the word sigma_i sigma_{i+1} ... sigma_{n-1}; i == n gives the identity.
Permutation sigma_in(int i, int n);

/// The n! simple braids in the canonical order
/// S_1 = (1), S_n = S_{n-1}, s_{n-1,n} S_{n-1}, ..., s_{1,n} S_{n-1}.
/// The last entry is flip(n).
std::vector<Permutation> simple_enumeration(int n);

/// Conjugation by the flip: exchanges sigma_i and sigma_{n-i}.
Permutation phi(const Permutation& x);

/// The simple *x with (*x) x = flip.
Permutation dual_left(const Permutation& x);
/// The simple x* with x (x*) = flip.
Permutation dual_right(const Permutation& x);

}  // namespace garside
