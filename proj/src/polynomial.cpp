#include "garside/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace garside {

namespace {

using RationalPoly = std::vector<Rational>;

void trim(RationalPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RationalPoly to_rational(const IntPolynomial& p) {
  RationalPoly out;
  for (const Integer& c : p.coefficients()) out.emplace_back(c);
  return out;
}

// Remainder of a by b (b non-zero); quotient written to `quotient` when given.
RationalPoly divide(RationalPoly a, const RationalPoly& b, RationalPoly* quotient) {
  trim(a);
  if (quotient != nullptr) quotient->clear();
  if (a.size() < b.size()) return a;
  RationalPoly q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  if (quotient != nullptr) {
    trim(q);
    *quotient = std::move(q);
  }
  return a;
}

IntPolynomial primitive_part(const RationalPoly& p) {
  if (p.empty()) return {};
  Integer common_den = 1;
  for (const Rational& c : p) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> coefficients;
  Integer content = 0;
  for (const Rational& c : p) {
    Integer v = c.get_num() * (common_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    coefficients.push_back(std::move(v));
  }
  if (sgn(coefficients.back()) < 0) content = -content;
  for (Integer& c : coefficients) c /= content;
  return IntPolynomial(std::move(coefficients));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(unsigned k) {
  std::vector<Integer> coefficients(k + 1);
  coefficients[k] = 1;
  return IntPolynomial(std::move(coefficients));
}

IntPolynomial IntPolynomial::linear(const Integer& root) { return IntPolynomial(std::vector<Integer>{-root, 1}); }

IntPolynomial IntPolynomial::from_leading(std::initializer_list<long> coefficients) {
  std::vector<Integer> out(coefficients.begin(), coefficients.end());
  std::reverse(out.begin(), out.end());
  return IntPolynomial(std::move(out));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

Integer IntPolynomial::operator[](std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> out;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) out.push_back(coefficients_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Integer> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (sgn(coefficients_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) out[i + j] += coefficients_[i] * other.coefficients_[j];
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (Integer& c : out.coefficients_) c = -c;
  return out;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (k == 0 || !unit) out += magnitude.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string coefficient_list(const IntPolynomial& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k > 0) out += ",";
    out += p.coefficients()[k].get_str();
  }
  return out + "]";
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (unsigned k = 0; k < exponent; ++k) out *= p;
  return out;
}

int x_valuation(const IntPolynomial& p) {
  int k = 0;
  while (k <= p.degree() && sgn(p.coefficients()[static_cast<std::size_t>(k)]) == 0) ++k;
  return p.is_zero() ? 0 : k;
}

IntPolynomial strip_x_power(const IntPolynomial& p) {
  const int k = x_valuation(p);
  return IntPolynomial(std::vector<Integer>(p.coefficients().begin() + k, p.coefficients().end()));
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& q, const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("division by the zero polynomial");
  RationalPoly quotient;
  const RationalPoly remainder = divide(to_rational(q), to_rational(p), &quotient);
  if (!remainder.empty()) return std::nullopt;
  std::vector<Integer> coefficients;
  for (const Rational& c : quotient) {
    if (c.get_den() != 1) return std::nullopt;
    coefficients.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coefficients));
}

bool divides(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) throw std::domain_error("division by the zero polynomial");
  return divide(to_rational(q), to_rational(p), nullptr).empty();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RationalPoly x = to_rational(a);
  RationalPoly y = to_rational(b);
  while (!y.empty()) {
    RationalPoly r = divide(x, y, nullptr);
    // Keep the intermediate remainders small.
    IntPolynomial reduced = primitive_part(r);
    x = std::move(y);
    y = to_rational(reduced);
  }
  return primitive_part(x);
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace garside
