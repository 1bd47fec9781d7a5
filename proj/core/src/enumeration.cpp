#include "endhered/enumeration.hpp"

#include <stdexcept>

namespace endhered {

DistributionTable::DistributionTable(std::string pattern, std::size_t max_n)
    : pattern_(std::move(pattern)), rows_(max_n) {}

ExactInteger DistributionTable::at(std::size_t n, std::size_t k) const {
  if (n < 1 || n > rows_.size() || k >= rows_[n - 1].size()) return 0;
  return rows_[n - 1][k];
}

void DistributionTable::set(std::size_t n, std::size_t k, ExactInteger value) {
  if (n < 1 || n > rows_.size()) throw std::out_of_range("DistributionTable::set: n out of range");
  auto& row = rows_[n - 1];
  if (row.size() <= k) row.resize(k + 1, ExactInteger(0));
  row[k] = std::move(value);
}

std::size_t DistributionTable::row_width(std::size_t n) const {
  if (n < 1 || n > rows_.size()) return 0;
  const auto& row = rows_[n - 1];
  std::size_t w = row.size();
  while (w > 0 && row[w - 1] == 0) --w;
  return w;
}

std::size_t DistributionTable::max_k() const {
  std::size_t k = 0;
  for (std::size_t n = 1; n <= rows_.size(); ++n) {
    const std::size_t w = row_width(n);
    if (w > 0) k = std::max(k, w - 1);
  }
  return k;
}

ExactInteger DistributionTable::row_sum(std::size_t n) const {
  ExactInteger sum = 0;
  if (n < 1 || n > rows_.size()) return sum;
  for (const auto& v : rows_[n - 1]) sum += v;
  return sum;
}

DistributionTable table_a21(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("table_a21: max_n must be >= 1");
  DistributionTable table("21", max_n);
  std::vector<ExactInteger> row{1};  // a_{1,k}
  table.set(1, 0, 1);
  auto get = [&](std::int64_t k) -> ExactInteger {
    if (k < 0 || k >= static_cast<std::int64_t>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  for (std::size_t n = 1; n < max_n; ++n) {
    const auto sn = static_cast<std::int64_t>(n);
    std::vector<ExactInteger> next(n + 1);
    for (std::int64_t k = 0; k <= sn; ++k) {
      next[static_cast<std::size_t>(k)] =
          get(k - 1) + 2 * (sn - k) * get(k) + 2 * (k + 1) * get(k + 1);
    }
    row = std::move(next);
    for (std::size_t k = 0; k < row.size(); ++k) table.set(n + 1, k, row[k]);
  }
  return table;
}

ExactInteger avoid21(std::int64_t n) {
  if (n < 1) throw std::domain_error("avoid21: n must be >= 1");
  if (n == 1) return 1;
  ExactInteger prev = 1, cur = 2;  // a_{1,0}, a_{2,0}
  for (std::int64_t m = 2; m < n; ++m) {
    ExactInteger next = 2 * m * cur + 2 * (m - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ExactInteger avoid21_incl_excl(std::int64_t n) {
  if (n < 1) throw std::domain_error("avoid21_incl_excl: n must be >= 1");
  const std::int64_t m = n - 1;
  ExactInteger sum = 0;
  ExactInteger df = 1;  // (2k+1)!!
  for (std::int64_t k = 0; k <= m; ++k) {
    if (k > 0) df *= 2 * k + 1;
    const ExactInteger term = binomial(m, k) * df;
    if ((m - k) % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

ExactInteger row1_21(std::int64_t n) {
  if (n < 1) throw std::domain_error("row1_21: n must be >= 1");
  if (n == 1) return 0;
  ExactInteger prev = 0, cur = 1;  // a_{1,1}, a_{2,1}
  for (std::int64_t m = 2; m < n; ++m) {
    ExactInteger next = 2 * m * (cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ExactInteger a21_closed_form(std::int64_t n, std::int64_t k) {
  if (!(n > k && k >= 0)) throw std::domain_error("a21_closed_form requires n > k >= 0");
  return binomial(n - 1, k) * avoid21(n - k);
}

std::vector<ExactRational> egf_row_b(std::size_t k, std::size_t max_n) {
  // e^{-z}: (-1)^i / i!;  (1-2z)^{-3/2}: (2i+1)!! / i!.
  std::vector<ExactRational> exp_neg(max_n + 1), inv_sqrt(max_n + 1);
  ExactInteger fact = 1, df = 1;
  for (std::size_t i = 0; i <= max_n; ++i) {
    if (i > 0) {
      fact *= i;
      df *= 2 * i + 1;
    }
    exp_neg[i] = ExactRational(i % 2 == 0 ? 1 : -1, fact);
    inv_sqrt[i] = ExactRational(df, fact);
  }
  const ExactRational shift(1, factorial(static_cast<std::int64_t>(k)));
  std::vector<ExactRational> out(max_n + 1, ExactRational(0));
  for (std::size_t n = k; n <= max_n; ++n) {
    const std::size_t m = n - k;
    ExactRational c = 0;
    for (std::size_t i = 0; i <= m; ++i) c += exp_neg[i] * inv_sqrt[m - i];
    out[n] = c * shift;
  }
  return out;
}

DistributionTable table_c321(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("table_c321: max_n must be >= 1");
  std::vector<ExactInteger> avoid(max_n + 1, 0);  // avoid[m] = a_{m,0}
  avoid[1] = 1;
  if (max_n >= 2) avoid[2] = 2;
  for (std::size_t m = 2; m < max_n; ++m) {
    avoid[m + 1] = 2 * m * avoid[m] + 2 * (m - 1) * avoid[m - 1];
  }
  DistributionTable table("321", max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto sn = static_cast<std::int64_t>(n);
    ExactInteger c0 = 0;
    for (std::int64_t s = 0; s <= sn / 2; ++s) {
      c0 += binomial(sn - s, s) * avoid[static_cast<std::size_t>(sn - s)];
    }
    table.set(n, 0, c0);
    for (std::int64_t k = 1; k + 2 <= sn; ++k) {
      ExactInteger ck = 0;
      for (std::int64_t s = 1; s <= (sn - k) / 2; ++s) {
        ck += binomial(k + s - 1, k) * binomial(sn - k - s, s) *
              avoid[static_cast<std::size_t>(sn - k - s)];
      }
      table.set(n, static_cast<std::size_t>(k), ck);
    }
  }
  return table;
}

TruncatedBivariateSeries<ExactInteger> series_d132(std::size_t max_n) {
  std::vector<ExactInteger> all_matchings(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    all_matchings[n] = double_factorial(2 * static_cast<std::int64_t>(n) - 1);
  }
  // z + (u - 1) z^3
  TruncatedBivariateSeries<ExactInteger> inner(max_n);
  inner.add_term(1, 0, 1);
  inner.add_term(3, 1, 1);
  inner.add_term(3, 0, -1);
  return compose<ExactInteger>(all_matchings, inner);
}

DistributionTable table_d132(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("table_d132: max_n must be >= 1");
  const auto series = series_d132(max_n);
  DistributionTable table("132", max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 0; k < series.u_extent(n); ++k) table.set(n, k, series.coeff(n, k));
  }
  return table;
}

namespace {

DistributionTable relabel(const DistributionTable& src, const std::string& label) {
  DistributionTable out(label, src.max_n());
  for (std::size_t n = 1; n <= src.max_n(); ++n) {
    for (std::size_t k = 0; k < src.row_width(n); ++k) out.set(n, k, src.at(n, k));
  }
  return out;
}

}  // namespace

std::optional<DistributionTable> table_for_pattern(const EndheredPattern& pat, std::size_t max_n) {
  const std::string label = pat.to_string();
  if (pat.size() == 2) return relabel(table_a21(max_n), label);
  if (pat.size() == 3) {
    if (label == "321" || label == "123") return relabel(table_c321(max_n), label);
    return relabel(table_d132(max_n), label);
  }
  return std::nullopt;
}

}  // namespace endhered
