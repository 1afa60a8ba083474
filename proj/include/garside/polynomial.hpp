#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garside/integer.hpp"

namespace garside {

/// Dense polynomial with exact integer coefficients, constant term first.
/// Trailing zero coefficients are always trimmed; the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  /// x^k
  static IntPolynomial monomial(unsigned k);
  /// x - root
  static IntPolynomial linear(const Integer& root);
  /// Coefficients listed from the leading term down, e.g. {1, -6, 3} is x^2 - 6x + 3.
  static IntPolynomial from_leading(std::initializer_list<long> coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  /// Coefficient of x^k (zero past the degree).
  Integer operator[](std::size_t k) const;
  const Integer& leading() const { return coefficients_.back(); }

  Integer evaluate(const Integer& x) const;
  IntPolynomial derivative() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  IntPolynomial operator-() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

/// Human-readable form, e.g. "x^2 - 6*x + 3".
std::string to_string(const IntPolynomial& p);
/// Coefficient list from the constant term up, e.g. "[3,-6,1]".
std::string coefficient_list(const IntPolynomial& p);

IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

/// Divides out the largest power of x.
IntPolynomial strip_x_power(const IntPolynomial& p);
/// Exponent of the largest power of x dividing p (0 for the zero polynomial).
int x_valuation(const IntPolynomial& p);

/// Long division over the rationals; the quotient when it divides q exactly
/// with integer coefficients. Throws std::domain_error when p is zero.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& q, const IntPolynomial& p);
/// True iff p divides q over the rationals. Throws std::domain_error when p is zero.
bool divides(const IntPolynomial& p, const IntPolynomial& q);

/// Monic greatest common divisor over the rationals, returned as a primitive
/// integer polynomial with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
bool is_squarefree(const IntPolynomial& p);

}  // namespace garside
