#pragma once

// Exact integer and rational arithmetic used by every counting routine.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace endhered {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// m!! for m >= -1, with (-1)!! = 0!! = 1.
ExactInteger double_factorial(std::int64_t m);

ExactInteger factorial(std::int64_t n);

/// Binomial coefficient; zero outside 0 <= k <= n.
ExactInteger binomial(std::int64_t n, std::int64_t k);

/// num/den rounded to double without materialising either operand as a
/// double, so it is accurate for operands far beyond DBL_MAX.
double ratio_to_double(const ExactInteger& num, const ExactInteger& den);
double ratio_to_double(const ExactRational& q);

/// Natural logarithm of a positive integer of any size.
double log_exact(const ExactInteger& x);

std::string to_decimal(const ExactInteger& x);
std::string to_decimal(const ExactRational& q);

}  // namespace endhered
