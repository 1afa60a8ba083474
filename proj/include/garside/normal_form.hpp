#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/permutation.hpp"

namespace garside {

/// A word in the positive generators sigma_1 .. sigma_{n-1}.
struct PositiveWord {
  int n = 1;
  std::vector<int> letters;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Whitespace-separated tokens: "s<k>" or "<k>" for sigma_k, "D" for the
/// fundamental braid, each optionally followed by "^<e>" with e >= 1.
/// D expands as sigma_1 ... sigma_{n-1} followed by D on n-1 strands.
/// Throws ParseError (syntax, with position) or std::out_of_range (index).
PositiveWord parse_word(std::string_view text, int n);

/// Product of the generator transpositions in word order.
Permutation word_permutation(const PositiveWord& w);

struct NormalSequence {
  int n = 1;
  std::vector<Permutation> factors;
};

/// sum over slots k (1-based) of k * inversion_number(x_k)
long potential(std::span<const Permutation> factors);

/// Called after each local move with the factor list and the moved slot and
/// generator.
using MoveObserver = std::function<void(std::span<const Permutation> factors, std::size_t slot, int generator)>;

/// Rewrites the factor list until every adjacent pair is normal: while
/// (x_k, x_{k+1}) is not normal, the smallest i in d_left(x_{k+1}) \ d_right(x_k)
/// moves from x_{k+1} to x_k. Sweeps left to right until a clean pass, then
/// drops trailing identities.
NormalSequence normalize_factors(int n, std::vector<Permutation> factors, const MoveObserver& observer = {});
/// Starts from one factor per letter.
NormalSequence normalize(const PositiveWord& w, const MoveObserver& observer = {});

int degree(const NormalSequence& s);
/// The d-th factor (1-based); the identity past the degree. Throws on d < 1.
Permutation dth_factor(const NormalSequence& s, int d);

bool is_normal(const NormalSequence& s);

}  // namespace garside
