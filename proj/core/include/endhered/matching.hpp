#pragma once

// Perfect matchings on 2n linearly ordered points.
//
// A matching of size n pairs every point of 1..2n with exactly one other
// point; equivalently it is a fixed-point-free involution of S_{2n}. All
// point indices in this interface are 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace endhered {

using Point = std::uint32_t;

struct Arc {
  Point left = 0;
  Point right = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class MatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matching {
 public:
  /// The empty matching (size 0).
  Matching() = default;

  /// Builds a matching of size n from its arcs. Arc endpoints may be given
  /// in either order. Throws MatchingError on duplicate, out-of-range,
  /// self-paired, or uncovered points.
  static Matching from_arcs(std::span<const Arc> arcs, std::size_t n);

  /// Inverse of to_permutation(). Throws MatchingError unless perm is a
  /// fixed-point-free involution on 1..perm.size().
  static Matching from_permutation(std::span<const Point> perm);

  /// Parses the "i-j i-j ..." serialization; size is inferred from the
  /// number of arcs.
  static Matching parse(std::string_view text);

  std::size_t size() const noexcept { return partner_.size() / 2; }
  std::size_t points() const noexcept { return partner_.size(); }
  bool empty() const noexcept { return partner_.empty(); }

  Point partner(Point i) const { return partner_.at(i - 1); }
  bool is_opener(Point i) const { return partner(i) > i; }

  /// One-line notation of the involution.
  const std::vector<Point>& to_permutation() const noexcept { return partner_; }

  /// Arcs sorted by left endpoint.
  std::vector<Arc> arcs() const;

  /// "1-3 2-6 4-5 7-8"; empty string for the empty matching.
  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  explicit Matching(std::vector<Point> partner) : partner_(std::move(partner)) {}

  std::vector<Point> partner_;
};

/// Lazy, single-consumer stream over all (2n-1)!! matchings of size n.
///
/// Order follows the recursive construction that inserts a new arc from
/// point 1: matchings are grouped by the partner of point 1 (ascending),
/// and within a group the remaining points carry the stream order of size
/// n-1 recursively.
class MatchingStream {
 public:
  explicit MatchingStream(std::size_t n);

  /// Restricts the stream to matchings where point 1 is paired with
  /// first_partner (2..2n). Used to split exhaustive scans into 2n-1
  /// independent parts.
  MatchingStream(std::size_t n, Point first_partner);

  /// Writes the next matching into out; returns false when exhausted.
  bool next(Matching& out);

 private:
  void decode(Matching& out) const;

  std::size_t n_;
  std::vector<std::uint32_t> digits_;
  bool fixed_first_ = false;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Matching> enumerate_matchings(std::size_t n);

/// Calls fn(const Matching&) for every matching of size n in stream order.
template <class Fn>
void for_each_matching(std::size_t n, Fn&& fn) {
  MatchingStream stream(n);
  Matching m;
  while (stream.next(m)) fn(static_cast<const Matching&>(m));
}

using Rng = std::mt19937_64;

/// Unbiased integer in [0, bound) from a 64-bit engine; bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform matching of size n: the smallest unpaired point is repeatedly
/// paired with a uniformly chosen remaining point.
Matching random_matching(std::size_t n, Rng& rng);
Matching random_matching(std::size_t n, std::uint64_t seed);

/// Reverses every maximal run of consecutive left endpoints.
Matching left_twist(const Matching& m);
/// Reverses every maximal run of consecutive right endpoints.
Matching right_twist(const Matching& m);

}  // namespace endhered
