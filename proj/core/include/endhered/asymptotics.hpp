#pragma once

// Floating-point evaluators for the large-n behaviour of the distribution
// tables. Everything that can overflow is evaluated in log space.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "endhered/exact.hpp"

namespace endhered {

struct AsymptoticEstimate {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double log_value = 0.0;  // natural log of the estimate
};

/// log of a_{n,k} ~ (2/e)^{n+1/2} n^n / (2^k k!); n >= 1, k >= 0.
double log_asym_a21(std::int64_t n, std::int64_t k);
AsymptoticEstimate asym_a21(std::int64_t n, std::int64_t k);

/// e^{-1/2} / (2^k k!), the Poisson(1/2) mass at k.
double poisson_half_pmf(std::int64_t k);

/// C_0 = 1, C_k = sum_{s=1}^{k} C(k-1, s-1) / (2^s s!).
ExactRational constant_Ck(std::int64_t k);

/// Limit of c_{n,k} / (2n-1)!!: C_k / 2^k * n^{-k}.
double asym_ratio_c(std::int64_t n, std::int64_t k);
/// Limit of d_{n,k} / (2n-1)!!: n^{-k} / (4^k k!).
double asym_ratio_d(std::int64_t n, std::int64_t k);

/// Exact ratio a_{n,0} / (2n-1)!! converted to double.
double avoid21_probability(std::int64_t n);

/// Total-variation distance between an empirical pmf (k -> frequency) and
/// Poisson(1/2), including the Poisson tail beyond the largest observed k.
template <class Map>
double tv_distance_to_poisson_half(const Map& pmf) {
  std::int64_t top = 0;
  for (const auto& [k, f] : pmf) top = std::max<std::int64_t>(top, static_cast<std::int64_t>(k));
  double sum = 0.0;
  double covered = 0.0;
  for (std::int64_t k = 0; k <= top; ++k) {
    const double p = poisson_half_pmf(k);
    covered += p;
    const auto it = pmf.find(static_cast<typename Map::key_type>(k));
    const double f = it == pmf.end() ? 0.0 : it->second;
    sum += std::abs(f - p);
  }
  sum += std::max(0.0, 1.0 - covered);
  return 0.5 * sum;
}

}  // namespace endhered
