#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace garside {

/// Exact arbitrary-precision integers and rationals used by every counting path.
using Integer = mpz_class;
using Rational = mpq_class;

/// Row vector aligned with the labels of a count matrix.
using CountVector = std::vector<Integer>;

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer power(const Integer& base, unsigned exponent);

}  // namespace garside
