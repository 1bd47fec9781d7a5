#include "endhered/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "endhered/enumeration.hpp"

namespace endhered {

double log_asym_a21(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0) throw std::domain_error("log_asym_a21 requires n >= 1, k >= 0");
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  return (dn + 0.5) * (std::numbers::ln2 - 1.0) + dn * std::log(dn) - dk * std::numbers::ln2 -
         std::lgamma(dk + 1.0);
}

AsymptoticEstimate asym_a21(std::int64_t n, std::int64_t k) {
  return {n, k, log_asym_a21(n, k)};
}

double poisson_half_pmf(std::int64_t k) {
  if (k < 0) throw std::domain_error("poisson_half_pmf requires k >= 0");
  const double dk = static_cast<double>(k);
  return std::exp(-0.5 - dk * std::numbers::ln2 - std::lgamma(dk + 1.0));
}

ExactRational constant_Ck(std::int64_t k) {
  if (k < 0) throw std::domain_error("constant_Ck requires k >= 0");
  if (k == 0) return 1;
  ExactRational sum = 0;
  for (std::int64_t s = 1; s <= k; ++s) {
    const ExactInteger den = (ExactInteger(1) << static_cast<unsigned>(s)) * factorial(s);
    sum += ExactRational(binomial(k - 1, s - 1), den);
  }
  return sum;
}

double asym_ratio_c(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0) throw std::domain_error("asym_ratio_c requires n >= 1, k >= 0");
  const double ck = ratio_to_double(constant_Ck(k));
  const double dk = static_cast<double>(k);
  return ck * std::exp(-dk * std::numbers::ln2 - dk * std::log(static_cast<double>(n)));
}

double asym_ratio_d(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0) throw std::domain_error("asym_ratio_d requires n >= 1, k >= 0");
  const double dk = static_cast<double>(k);
  return std::exp(-2.0 * dk * std::numbers::ln2 - std::lgamma(dk + 1.0) -
                  dk * std::log(static_cast<double>(n)));
}

double avoid21_probability(std::int64_t n) {
  return ratio_to_double(avoid21(n), double_factorial(2 * n - 1));
}

}  // namespace endhered
