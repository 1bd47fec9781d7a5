#include "endhered/enumeration.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "endhered/table_io.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

namespace endhered {
namespace {

void expect_matches(const DistributionTable& table, const reference::Rows& rows) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t n = 1; n <= 9; ++n) {
      EXPECT_EQ(table.at(n, k), rows[k][n - 1]) << table.pattern() << " n=" << n << " k=" << k;
    }
  }
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::size_t k = rows.size(); k < n + 2; ++k) EXPECT_EQ(table.at(n, k), 0);
  }
}

TEST(Exact, DoubleFactorial) {
  EXPECT_EQ(double_factorial(13), 135135);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(-1), 1);
  const std::vector<int> odd{1, 1, 3, 15, 105, 945, 10395};
  for (int n = 0; n < 7; ++n) EXPECT_EQ(double_factorial(2 * n - 1), odd[n]);
  EXPECT_EQ(double_factorial(8), 384);
}

TEST(Exact, BinomialAndFactorial) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(20), ExactInteger("2432902008176640000"));
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), oracle::binom(n, k));
  }
}

TEST(Exact, RatioToDouble) {
  EXPECT_DOUBLE_EQ(ratio_to_double(ExactInteger(1), ExactInteger(3)), 1.0 / 3.0);
  const ExactInteger big = double_factorial(1999);
  EXPECT_NEAR(ratio_to_double(big, big * 4), 0.25, 1e-15);
  EXPECT_NEAR(log_exact(factorial(200)), std::lgamma(201.0), 1e-9);
  EXPECT_EQ(to_decimal(ExactRational(5, 8)), "5/8");
}

TEST(Table21, PrintedValues) {
  const auto t = table_a21(9);
  expect_matches(t, reference::table_21());
  EXPECT_EQ(t.at(4, 0), 68);
  EXPECT_EQ(t.at(9, 2), 2381344);
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(t.at(n, n - 1), 1);
}

TEST(Table21, ClosedForm) {
  EXPECT_EQ(a21_closed_form(5, 1), 272);
  EXPECT_EQ(a21_closed_form(9, 4), 42280);
  EXPECT_THROW(a21_closed_form(3, 3), std::domain_error);
  EXPECT_THROW(a21_closed_form(3, -1), std::domain_error);
  const auto t = table_a21(30);
  for (std::int64_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(a21_closed_form(n, 0), avoid21(n));
    for (std::int64_t k = 0; k < n; ++k) ASSERT_EQ(a21_closed_form(n, k), t.at(n, k));
  }
}

TEST(Table21, ZerothAndFirstRows) {
  EXPECT_EQ(avoid21(1), 1);
  EXPECT_EQ(avoid21(3), 10);
  EXPECT_EQ(avoid21(8), 1269680);
  EXPECT_EQ(avoid21_incl_excl(2), 2);
  EXPECT_EQ(avoid21_incl_excl(3), 10);
  EXPECT_EQ(row1_21(4), 30);
  EXPECT_EQ(row1_21(9), 10157440);
  EXPECT_EQ(row1_21(1), 0);
  const auto t = table_a21(30);
  for (std::int64_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(avoid21(n), avoid21_incl_excl(n)) << n;
    EXPECT_EQ(avoid21(n), t.at(n, 0)) << n;
    if (n >= 2) EXPECT_EQ(row1_21(n), a21_closed_form(n, 1)) << n;
  }
}

TEST(Table21, EgfRows) {
  const auto b0 = egf_row_b(0, 30);
  EXPECT_EQ(b0[0] * factorial(0), 1);
  EXPECT_EQ(b0[2] * factorial(2), 10);
  const auto b1 = egf_row_b(1, 10);
  EXPECT_EQ(b1[3] * factorial(3), 30);
  EXPECT_EQ(b1[0], 0);
  const auto t = table_a21(31);
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto bk = egf_row_b(k, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      const ExactRational scaled = bk[n] * factorial(static_cast<std::int64_t>(n));
      ASSERT_EQ(denominator(scaled), 1);
      EXPECT_EQ(numerator(scaled), t.at(n + 1, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Table321, PrintedValues) {
  const auto t = table_c321(9);
  expect_matches(t, reference::table_321());
  EXPECT_EQ(t.at(6, 0), 10022);
  EXPECT_EQ(t.at(6, 1), 332);
  EXPECT_EQ(t.at(3, 1), 1);
}

TEST(Table132, PrintedValues) {
  const auto t = table_d132(9);
  expect_matches(t, reference::table_132());
  EXPECT_EQ(t.at(3, 0), 14);
  EXPECT_EQ(t.at(6, 2), 3);
  EXPECT_EQ(t.at(9, 3), 15);
}

TEST(Table132, MatchesBinomialExpansion) {
  const auto t = table_d132(40);
  for (long n = 1; n <= 40; ++n) {
    for (long k = 0; 3 * k <= n + 3; ++k) {
      ASSERT_EQ(t.at(n, k), oracle::d_direct(n, k)) << "n=" << n << " k=" << k;
      if (3 * k > n) EXPECT_EQ(t.at(n, k), 0);
      EXPECT_GE(t.at(n, k), 0);
    }
  }
}

TEST(Tables, RowSums) {
  const auto a = table_a21(40), c = table_c321(40), d = table_d132(40);
  for (std::int64_t n = 1; n <= 40; ++n) {
    const ExactInteger total = double_factorial(2 * n - 1);
    EXPECT_EQ(a.row_sum(n), total);
    EXPECT_EQ(c.row_sum(n), total);
    EXPECT_EQ(d.row_sum(n), total);
  }
}

TEST(Tables, AgreeWithBruteForce) {
  for (std::size_t p = 2; p <= 3; ++p) {
    for (const auto& q : EndheredPattern::all_of_size(p)) {
      const auto table = table_for_pattern(q, 6);
      ASSERT_TRUE(table.has_value());
      EXPECT_EQ(table->pattern(), q.to_string());
      for (std::size_t n = 1; n <= 6; ++n) {
        const auto dist = distribution_bruteforce(n, q);
        for (std::size_t k = 0; k <= n; ++k) {
          const auto it = dist.find(k);
          const std::uint64_t want = it == dist.end() ? 0 : it->second;
          EXPECT_EQ(table->at(n, k), want) << q.to_string() << " n=" << n << " k=" << k;
        }
      }
    }
  }
  EXPECT_FALSE(table_for_pattern(EndheredPattern::parse("1234"), 5).has_value());
}

TEST(Series, TruncatedProduct) {
  using S = TruncatedBivariateSeries<ExactInteger>;
  const S x = S::monomial(4, 1, 0, 1) + S::monomial(4, 1, 1, 2);  // z + 2uz
  const S sq = x * x;
  EXPECT_EQ(sq.coeff(2, 0), 1);
  EXPECT_EQ(sq.coeff(2, 1), 4);
  EXPECT_EQ(sq.coeff(2, 2), 4);
  const S high = S::monomial(4, 3, 0, 1) * S::monomial(4, 2, 0, 1);
  EXPECT_EQ(high, S(4));
  EXPECT_THROW(S(3) * S(4), std::invalid_argument);
}

TEST(Series, ComposeGeometric) {
  using S = TruncatedBivariateSeries<ExactInteger>;
  // 1/(1-x) at x = z + uz: coefficient of z^n u^k is C(n,k).
  const std::vector<ExactInteger> ones(9, 1);
  const S inner = S::monomial(8, 1, 0, 1) + S::monomial(8, 1, 1, 1);
  const S out = compose(std::span<const ExactInteger>(ones), inner);
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(out.coeff(n, k), oracle::binom(n, k));
  }
  const S constant = S::monomial(8, 0, 0, 1);
  EXPECT_THROW(compose(std::span<const ExactInteger>(ones), constant), std::invalid_argument);
}

TEST(TableIo, Formats) {
  const auto t = table_a21(3);
  std::ostringstream csv, json, text;
  write_table_csv(csv, t);
  EXPECT_EQ(csv.str().substr(0, 12), "n,k,count\n1,");
  EXPECT_NE(csv.str().find("3,0,10\n"), std::string::npos);
  write_table_json(json, t);
  EXPECT_NE(json.str().find("\"pattern\":\"21\""), std::string::npos) << json.str();
  EXPECT_NE(json.str().find("[3,0,\"10\"]"), std::string::npos) << json.str();
  write_table_text(text, t);
  EXPECT_NE(text.str().find("10"), std::string::npos);
}

}  // namespace
}  // namespace endhered
