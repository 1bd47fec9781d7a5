#pragma once

// Exact distribution tables for endhered patterns of size 2 and 3.
//
//   a_{n,k}: pattern 21 (equivalently 12)
//   c_{n,k}: pattern 321 (equivalently 123)
//   d_{n,k}: pattern 132 (equivalently 213, 231, 312)
//
// Each quantity is available through several independent routes so that
// they can be cross-checked against each other and against brute force.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endhered/exact.hpp"
#include "endhered/pattern.hpp"
#include "endhered/series.hpp"

namespace endhered {

/// Counts indexed by matching size n (1..max_n) and occurrence count k.
class DistributionTable {
 public:
  DistributionTable(std::string pattern, std::size_t max_n);

  const std::string& pattern() const noexcept { return pattern_; }
  std::size_t max_n() const noexcept { return rows_.size(); }

  /// Zero for any (n, k) not stored.
  ExactInteger at(std::size_t n, std::size_t k) const;
  void set(std::size_t n, std::size_t k, ExactInteger value);

  /// Largest k with a nonzero entry for some n.
  std::size_t max_k() const;
  /// Number of stored k-slots for size n (trailing zeros trimmed).
  std::size_t row_width(std::size_t n) const;
  ExactInteger row_sum(std::size_t n) const;

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;

 private:
  std::string pattern_;
  std::vector<std::vector<ExactInteger>> rows_;  // rows_[n-1][k]
};

/// a_{n,k} by the insertion recurrence
///   a_{n+1,k} = a_{n,k-1} + 2(n-k) a_{n,k} + 2(k+1) a_{n,k+1}.
DistributionTable table_a21(std::size_t max_n);

/// a_{n,k} = C(n-1, k) a_{n-k,0}; requires n > k >= 0.
ExactInteger a21_closed_form(std::int64_t n, std::int64_t k);

/// a_{n,0} by a_{n+1,0} = 2n a_{n,0} + 2(n-1) a_{n-1,0}; n >= 1.
ExactInteger avoid21(std::int64_t n);

/// a_{n,0} by inclusion-exclusion: sum_k (-1)^{m-k} C(m,k) (2k+1)!! with
/// m = n-1; n >= 1.
ExactInteger avoid21_incl_excl(std::int64_t n);

/// a_{n,1} by a_{n+1,1} = 2n (a_{n,1} + a_{n-1,1}); n >= 1.
ExactInteger row1_21(std::int64_t n);

/// Coefficients [z^0..z^max_n] of [u^k] B(z,u) = z^k/k! e^{-z} (1-2z)^{-3/2},
/// where B is the exponential generating function of b_{n,k} = a_{n+1,k}.
std::vector<ExactRational> egf_row_b(std::size_t k, std::size_t max_n);

/// c_{n,k} from the doubling/stacking sums over 21-avoiding matchings.
DistributionTable table_c321(std::size_t max_n);

/// D(z,u) = F(z + (u-1) z^3) with F(z) = sum (2n-1)!! z^n, expanded to
/// z-degree max_n.
TruncatedBivariateSeries<ExactInteger> series_d132(std::size_t max_n);

/// d_{n,k} read off series_d132.
DistributionTable table_d132(std::size_t max_n);

/// Formula table for a pattern of size 2 or 3, labelled with that pattern;
/// nullopt for other sizes.
std::optional<DistributionTable> table_for_pattern(const EndheredPattern& pat, std::size_t max_n);

}  // namespace endhered
