#pragma once

// Endhered patterns: p arcs whose starting points form an interval and whose
// ending points form an interval. A pattern is identified with the
// permutation pi read off the ending points; a matching mu contains pi at
// (i+1, j+1) when mu_{i+s} = pi^{-1}_s + j for s = 1..p.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "endhered/matching.hpp"

namespace endhered {

class EndheredPattern {
 public:
  /// perm must be a permutation of 1..p with p >= 1.
  explicit EndheredPattern(std::vector<std::uint32_t> perm);

  /// Digit form ("132") or comma-separated form ("10,1,2,...").
  static EndheredPattern parse(std::string_view text);

  /// Reads the pattern formed by a permutational matching, i.e. one whose
  /// first p points are all left endpoints. Inverse of as_matching().
  static EndheredPattern from_matching(const Matching& m);

  /// All p! patterns of size p in lexicographic order.
  static std::vector<EndheredPattern> all_of_size(std::size_t p);

  std::size_t size() const noexcept { return perm_.size(); }
  const std::vector<std::uint32_t>& perm() const noexcept { return perm_; }
  const std::vector<std::uint32_t>& inverse() const noexcept { return inverse_; }

  std::string to_string() const;

  friend bool operator==(const EndheredPattern& a, const EndheredPattern& b) {
    return a.perm_ == b.perm_;
  }
  friend auto operator<=>(const EndheredPattern& a, const EndheredPattern& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  std::vector<std::uint32_t> perm_;
  std::vector<std::uint32_t> inverse_;
};

struct Occurrence {
  Point start = 0;  // i+1
  Point end = 0;    // j+1
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// The size-p matching whose single occurrence of pat sits at (1, p+1).
Matching as_matching(const EndheredPattern& pat);

/// Pattern image under the twists; equals reversal (right) and complement
/// (left) of the permutation.
EndheredPattern right_twist(const EndheredPattern& pat);
EndheredPattern left_twist(const EndheredPattern& pat);

/// Every occurrence in ascending start order, overlapping ones included.
/// Ending points are allowed anywhere up to 2n (j <= 2n - p).
std::vector<Occurrence> find_occurrences(const Matching& m, const EndheredPattern& pat);
std::size_t count_occurrences(const Matching& m, const EndheredPattern& pat);

class SizeGuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BruteForceOptions {
  std::size_t max_n = 10;
  bool allow_large = false;
};

/// k -> number of matchings of size n with exactly k occurrences.
using Distribution = std::map<std::size_t, std::uint64_t>;
/// (k, m) -> number of matchings with k occurrences of the first pattern
/// and m of the second.
using JointDistribution = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

/// Exhaustive scan over all (2n-1)!! matchings, one distribution per
/// pattern. Throws SizeGuardError when n exceeds the guard.
std::vector<Distribution> distributions_bruteforce(std::size_t n,
                                                   std::span<const EndheredPattern> patterns,
                                                   const BruteForceOptions& options = {});
Distribution distribution_bruteforce(std::size_t n, const EndheredPattern& pat,
                                     const BruteForceOptions& options = {});
JointDistribution joint_distribution_bruteforce(std::size_t n, const EndheredPattern& first,
                                                const EndheredPattern& second,
                                                const BruteForceOptions& options = {});

/// Partition of the p! patterns of size p into classes with identical
/// distributions for every n in 1..max_n. Classes are listed by their
/// smallest member; members ascend. p > 3 requires allow_large, p > 6 is
/// always rejected.
std::vector<std::vector<EndheredPattern>> wilf_classes(std::size_t p, std::size_t max_n,
                                                       const BruteForceOptions& options = {});

/// Empirical frequency of each occurrence count over uniform samples.
/// Deterministic for a fixed seed regardless of the worker count.
std::map<std::size_t, double> monte_carlo_distribution(std::size_t n, const EndheredPattern& pat,
                                                       std::size_t samples, std::uint64_t seed);

}  // namespace endhered
