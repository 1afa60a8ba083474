#include <deque>

#include "doctest.h"
#include "garside/incidence.hpp"
#include "garside/normal_form.hpp"
#include "support/oracles.hpp"

using namespace garside;

namespace {

// A reduced word for x, peeling right descents.
std::vector<int> reduced_word(Permutation x) {
  std::deque<int> letters;
  while (!x.is_identity()) {
    const auto members = d_right(x).members();
    const int i = members.front();
    letters.push_front(i);
    x = compose(x, Permutation::transposition(i, x.n()));
  }
  return {letters.begin(), letters.end()};
}

PositiveWord concatenate(int n, const std::vector<Permutation>& factors) {
  PositiveWord w{n, {}};
  for (const auto& f : factors) {
    const auto letters = reduced_word(f);
    w.letters.insert(w.letters.end(), letters.begin(), letters.end());
  }
  return w;
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(parse_word("s1 s2 s1", 3).letters == std::vector<int>{1, 2, 1});
  CHECK(parse_word("1 2^3", 3).letters == std::vector<int>{1, 2, 2, 2});
  CHECK(parse_word("  ", 3).letters.empty());
  CHECK(parse_word("D", 3).letters == std::vector<int>{1, 2, 1});
  CHECK(parse_word("D^2", 4).letters.size() == 12);
  CHECK(parse_word("D", 1).letters.empty());
  CHECK_THROWS_AS(parse_word("s3", 3), std::out_of_range);
  CHECK_THROWS_AS(parse_word("s0", 3), std::out_of_range);
  CHECK_THROWS_AS(parse_word("s1 x", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s1^0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s1^", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s", 3), ParseError);
  try {
    parse_word("s1 s2 q", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("small words") {
  const auto braid = normalize(parse_word("s1 s2 s1", 3));
  REQUIRE(degree(braid) == 1);
  CHECK(braid.factors[0] == Permutation::flip(3));

  const auto square = normalize(parse_word("s1 s1", 3));
  CHECK(degree(square) == 2);
  CHECK(square.factors[0] == Permutation::transposition(1, 3));
  CHECK(dth_factor(square, 3).is_identity());
  CHECK_THROWS_AS(dth_factor(square, 0), std::invalid_argument);

  const auto pair = normalize(parse_word("s2 s1", 3));
  REQUIRE(degree(pair) == 1);
  CHECK(pair.factors[0] == Permutation({3, 1, 2}));
  CHECK(word_permutation(parse_word("s2 s1", 3)) == pair.factors[0]);

  CHECK(degree(normalize(parse_word("", 4))) == 0);
  CHECK(normalize(parse_word("s1 s3", 4)).factors == normalize(parse_word("s3 s1", 4)).factors);
  CHECK(degree(normalize(parse_word("s1 s3", 4))) == 1);
}

TEST_CASE("powers of the fundamental braid") {
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; d <= 4; ++d) {
      const auto s = normalize(parse_word("D^" + std::to_string(d), n));
      REQUIRE(degree(s) == d);
      for (const auto& f : s.factors) CHECK(f == Permutation::flip(n));
    }
  }
}

TEST_CASE("random words") {
  oracle::Gen gen(0x5eed0001);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(2, 7);
    const int length = gen.uniform(0, 30);
    const PositiveWord w{n, gen.word(n, length)};
    long last_potential = -1;
    int moves = 0;
    const auto s = normalize(w, [&](std::span<const Permutation> factors, std::size_t, int) {
      const long p = potential(factors);
      if (last_potential >= 0) REQUIRE(p < last_potential);
      last_potential = p;
      ++moves;
    });
    REQUIRE(is_normal(s));
    for (const auto& f : s.factors) REQUIRE_FALSE(f.is_identity());

    // Letters are conserved and the underlying permutation is unchanged.
    int letters = 0;
    Permutation product = Permutation::identity(n);
    for (const auto& f : s.factors) {
      letters += inversion_number(f);
      product = compose(product, f);
    }
    REQUIRE(letters == length);
    REQUIRE(product == word_permutation(w));

    // Idempotent.
    const auto again = normalize_factors(n, s.factors);
    REQUIRE(again.factors == s.factors);
    REQUIRE(normalize(concatenate(n, s.factors)).factors == s.factors);
    (void)moves;
  }
}

TEST_CASE("potential drops by the slot weight on each move") {
  oracle::Gen gen(0x5eed0002);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.uniform(2, 6);
    const PositiveWord w{n, gen.word(n, gen.uniform(1, 20))};
    std::vector<Permutation> start;
    for (int i : w.letters) start.push_back(Permutation::transposition(i, n));
    long previous = potential(start);
    normalize(w, [&](std::span<const Permutation> factors, std::size_t slot, int generator) {
      const long p = potential(factors);
      REQUIRE(previous - p == 1);
      REQUIRE(generator >= 1);
      REQUIRE(generator < n);
      REQUIRE(slot + 1 < factors.size());
      previous = p;
    });
  }
}

TEST_CASE("normal sequences are fixed points and are counted by the pipeline") {
  for (int n = 2; n <= 4; ++n) {
    const int dmax = n == 4 ? 2 : 3;
    const auto simples = simple_enumeration(n);
    for (int d = 1; d <= dmax; ++d) {
      std::vector<std::size_t> index(static_cast<std::size_t>(d), 0);
      Integer fixed = 0;
      while (true) {
        std::vector<Permutation> tuple;
        for (auto k : index) tuple.push_back(simples[k]);
        auto trimmed = tuple;
        while (!trimmed.empty() && trimmed.back().is_identity()) trimmed.pop_back();
        if (normalize(concatenate(n, tuple)).factors == trimmed) fixed += 1;
        std::size_t pos = 0;
        while (pos < index.size() && ++index[pos] == simples.size()) index[pos++] = 0;
        if (pos == index.size()) break;
      }
      CHECK(fixed == b_total(n, d));
    }
  }
}
