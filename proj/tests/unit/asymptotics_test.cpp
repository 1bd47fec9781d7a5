#include "endhered/asymptotics.hpp"

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "endhered/enumeration.hpp"

namespace endhered {
namespace {

double avoid_ratio(std::int64_t n) {
  return ratio_to_double(avoid21(n), double_factorial(2 * n - 1));
}

TEST(Asymptotics, EstimateAtNine) {
  const double est = std::exp(log_asym_a21(9, 0));
  EXPECT_NEAR(est / 2.10e7, 1.0, 0.01);
  EXPECT_NEAR(21505552.0 / est, 1.02, 0.01);
  EXPECT_EQ(asym_a21(9, 0).n, 9);
  EXPECT_DOUBLE_EQ(asym_a21(9, 2).log_value, log_asym_a21(9, 2));
}

TEST(Asymptotics, KDependence) {
  for (std::int64_t k = 0; k < 10; ++k) {
    EXPECT_NEAR(std::exp(log_asym_a21(50, k) - log_asym_a21(50, k + 1)), 2.0 * (k + 1), 1e-9);
  }
}

TEST(Asymptotics, RatioApproachesOne) {
  double previous = 1.0;
  for (std::int64_t n : {10, 30, 100, 300, 1000}) {
    const double ratio = std::exp(log_exact(avoid21(n)) - log_asym_a21(n, 0));
    const double gap = std::abs(ratio - 1.0);
    EXPECT_LT(gap, previous) << n;
    previous = gap;
  }
  EXPECT_LT(previous, 0.01);
}

TEST(Poisson, Pmf) {
  EXPECT_NEAR(poisson_half_pmf(0), 0.6065306597126334, 1e-15);
  double sum = 0;
  for (std::int64_t k = 0; k <= 50; ++k) sum += poisson_half_pmf(k);
  EXPECT_NEAR(sum, 1.0, 1e-12);
  for (std::int64_t k = 0; k < 20; ++k) {
    EXPECT_NEAR(poisson_half_pmf(k) / poisson_half_pmf(k + 1), 2.0 * (k + 1), 1e-9);
  }
}

TEST(Poisson, TotalVariation) {
  std::map<std::size_t, double> exact;
  for (std::size_t k = 0; k <= 30; ++k) exact[k] = poisson_half_pmf(static_cast<std::int64_t>(k));
  EXPECT_NEAR(tv_distance_to_poisson_half(exact), 0.0, 1e-12);
  EXPECT_NEAR(tv_distance_to_poisson_half(std::map<std::size_t, double>{{0, 1.0}}),
              1.0 - poisson_half_pmf(0), 1e-12);
}

TEST(Constants, Ck) {
  EXPECT_EQ(constant_Ck(0), ExactRational(1));
  EXPECT_EQ(constant_Ck(1), ExactRational(1, 2));
  EXPECT_EQ(constant_Ck(2), ExactRational(5, 8));
}

TEST(Constants, AsymRatios) {
  for (std::int64_t n : {1, 10, 1000}) {
    EXPECT_DOUBLE_EQ(asym_ratio_d(n, 0), 1.0);
    EXPECT_DOUBLE_EQ(asym_ratio_c(n, 0), 1.0);
  }
  EXPECT_NEAR(asym_ratio_c(100, 1), 0.0025, 1e-15);
  EXPECT_NEAR(asym_ratio_d(100, 1), 0.0025, 1e-15);
}

TEST(Convergence, AvoidanceProbability) {
  const double limit = std::exp(-0.5);
  const double e10 = std::abs(avoid_ratio(10) - limit);
  const double e100 = std::abs(avoid_ratio(100) - limit);
  const double e1000 = std::abs(avoid_ratio(1000) - limit);
  EXPECT_LT(e100, e10);
  EXPECT_LT(e1000, e100);
  EXPECT_LT(e1000, 0.005);
  EXPECT_NEAR(avoid21_probability(1000), avoid_ratio(1000), 1e-12);
}

TEST(Convergence, RowRatios) {
  for (std::int64_t k = 0; k <= 3; ++k) {
    const double r = ratio_to_double(a21_closed_form(1000, k), a21_closed_form(1000, k + 1));
    EXPECT_NEAR(r / (2.0 * (k + 1)), 1.0, 0.02) << k;
  }
}

TEST(Convergence, Pattern132FirstRow) {
  const auto d = table_d132(200);
  const double scaled = ratio_to_double(d.at(200, 1) * 200, double_factorial(399));
  EXPECT_NEAR(scaled / 0.25, 1.0, 0.05);
}

}  // namespace
}  // namespace endhered
