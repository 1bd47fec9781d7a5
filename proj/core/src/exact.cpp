#include "endhered/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace endhered {

ExactInteger double_factorial(std::int64_t m) {
  if (m < -1) throw std::domain_error("double_factorial: argument below -1");
  ExactInteger result = 1;
  for (std::int64_t f = m; f > 1; f -= 2) result *= f;
  return result;
}

ExactInteger factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  ExactInteger result = 1;
  for (std::int64_t f = 2; f <= n; ++f) result *= f;
  return result;
}

ExactInteger binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInteger result = 1;
  // Each partial product is itself a binomial, so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

// Top 64 significant bits of |x| together with the shift that was dropped.
std::pair<double, std::int64_t> leading_bits(const ExactInteger& x) {
  const ExactInteger ax = abs(x);
  const std::int64_t bits = static_cast<std::int64_t>(msb(ax)) + 1;
  const std::int64_t shift = std::max<std::int64_t>(0, bits - 64);
  const ExactInteger top = ax >> shift;
  return {top.convert_to<double>(), shift};
}

}  // namespace

double ratio_to_double(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw std::domain_error("ratio_to_double: zero denominator");
  if (num == 0) return 0.0;
  const auto [n, ns] = leading_bits(num);
  const auto [d, ds] = leading_bits(den);
  const double sign = ((num < 0) != (den < 0)) ? -1.0 : 1.0;
  return sign * std::ldexp(n / d, static_cast<int>(ns - ds));
}

double ratio_to_double(const ExactRational& q) {
  return ratio_to_double(numerator(q), denominator(q));
}

double log_exact(const ExactInteger& x) {
  if (x <= 0) throw std::domain_error("log_exact: non-positive argument");
  const auto [top, shift] = leading_bits(x);
  return std::log(top) + static_cast<double>(shift) * std::log(2.0);
}

std::string to_decimal(const ExactInteger& x) { return x.str(); }

std::string to_decimal(const ExactRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace endhered
