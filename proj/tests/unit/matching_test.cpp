#include "endhered/matching.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "endhered/exact.hpp"
#include "oracles.hpp"

namespace endhered {
namespace {

Matching arcs_of(std::initializer_list<Arc> arcs) {
  std::vector<Arc> v(arcs);
  return Matching::from_arcs(v, v.size());
}

TEST(Matching, FromArcsPermutation) {
  const Matching m = arcs_of({{1, 3}, {2, 6}, {4, 5}, {7, 8}});
  EXPECT_EQ(m.size(), 4u);
  EXPECT_EQ(m.to_permutation(), (std::vector<Point>{3, 6, 1, 5, 4, 2, 8, 7}));
  EXPECT_EQ(m.to_string(), "1-3 2-6 4-5 7-8");
}

TEST(Matching, EmptyAndSmallest) {
  const Matching empty = Matching::from_arcs({}, 0);
  EXPECT_TRUE(empty.empty());
  EXPECT_TRUE(empty.to_permutation().empty());
  EXPECT_EQ(empty.to_string(), "");
  EXPECT_EQ(arcs_of({{1, 2}}).to_permutation(), (std::vector<Point>{2, 1}));
}

TEST(Matching, FromArcsErrors) {
  EXPECT_THROW(arcs_of({{1, 2}, {2, 3}}), MatchingError);   // duplicate point 2
  EXPECT_THROW(arcs_of({{1, 5}}), MatchingError);           // out of range
  EXPECT_THROW(arcs_of({{1, 1}}), MatchingError);           // self pair
  std::vector<Arc> one{{1, 2}};
  EXPECT_THROW(Matching::from_arcs(one, 2), MatchingError);  // uncovered 3, 4
  try {
    arcs_of({{1, 2}, {2, 3}});
  } catch (const MatchingError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate point 2"), std::string::npos);
  }
}

TEST(Matching, PermutationRoundTrip) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_matching(n, [](const Matching& m) {
      EXPECT_EQ(Matching::from_permutation(m.to_permutation()), m);
      const auto arcs = m.arcs();
      EXPECT_EQ(Matching::from_arcs(arcs, m.size()), m);
      EXPECT_EQ(Matching::parse(m.to_string()), m);
    });
  }
  const std::vector<Point> not_involution{2, 3, 1, 4};
  EXPECT_THROW(Matching::from_permutation(not_involution), MatchingError);
  const std::vector<Point> fixed{1, 2};
  EXPECT_THROW(Matching::from_permutation(fixed), MatchingError);
}

TEST(Matching, ParseErrors) {
  EXPECT_THROW(Matching::parse("1-3 2"), MatchingError);
  EXPECT_THROW(Matching::parse("1+2"), MatchingError);
  EXPECT_EQ(Matching::parse("  ").size(), 0u);
}

TEST(MatchingStream, CountsAreDoubleFactorial) {
  const std::vector<std::uint64_t> expected{1, 1, 3, 15, 105, 945, 10395};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    std::size_t count = 0;
    for_each_matching(n, [&](const Matching&) { ++count; });
    EXPECT_EQ(count, expected[n]) << "n=" << n;
  }
}

TEST(MatchingStream, SizeSevenAllDistinct) {
  std::set<std::vector<Point>> seen;
  std::size_t count = 0;
  for_each_matching(7, [&](const Matching& m) {
    ++count;
    seen.insert(m.to_permutation());
  });
  EXPECT_EQ(count, 135135u);
  EXPECT_EQ(seen.size(), 135135u);
  EXPECT_EQ(ExactInteger(count), double_factorial(13));
}

TEST(MatchingStream, SameSetAsRecursiveOracle) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::vector<Point>> ours, theirs;
    for_each_matching(n, [&](const Matching& m) { ours.insert(m.to_permutation()); });
    for (const auto& p : oracle::all_partner_arrays(n)) theirs.insert(p);
    EXPECT_EQ(ours, theirs) << "n=" << n;
  }
}

TEST(MatchingStream, GroupedByPartnerOfPointOneAscending) {
  const auto all = enumerate_matchings(4);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(all[i - 1].partner(1), all[i].partner(1));
  }
  // The first matching of each size is the all-adjacent one.
  EXPECT_EQ(all.front().to_string(), "1-2 3-4 5-6 7-8");
}

TEST(MatchingStream, PartitionCoversStream) {
  const std::size_t n = 5;
  std::vector<Matching> joined;
  for (Point first = 2; first <= 2 * n; ++first) {
    MatchingStream s(n, first);
    Matching m;
    while (s.next(m)) {
      EXPECT_EQ(m.partner(1), first);
      joined.push_back(m);
    }
  }
  EXPECT_EQ(joined, enumerate_matchings(n));
  EXPECT_THROW(MatchingStream(n, 1), MatchingError);
  EXPECT_THROW(MatchingStream(n, 11), MatchingError);
}

TEST(RandomMatching, TrivialSizes) {
  EXPECT_TRUE(random_matching(0, 42).empty());
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    EXPECT_EQ(random_matching(1, seed).to_string(), "1-2");
  }
}

TEST(RandomMatching, ReproducibleForSeed) {
  EXPECT_EQ(random_matching(50, 1234), random_matching(50, 1234));
  EXPECT_NE(random_matching(50, 1234), random_matching(50, 1235));
}

TEST(RandomMatching, UniformOverSizeThree) {
  Rng rng(2024);
  std::map<std::vector<Point>, std::size_t> freq;
  const std::size_t samples = 100000;
  for (std::size_t s = 0; s < samples; ++s) ++freq[random_matching(3, rng).to_permutation()];
  ASSERT_EQ(freq.size(), 15u);
  for (const auto& [perm, c] : freq) {
    EXPECT_NEAR(static_cast<double>(c) / samples, 1.0 / 15.0, 0.005);
  }
}

TEST(RandomMatching, UniformBelowStaysInRange) {
  Rng rng(7);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 1000ULL, (1ULL << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, bound), bound);
  }
}

TEST(Twist, RightTwistOfNest) {
  EXPECT_EQ(right_twist(arcs_of({{1, 4}, {2, 3}})), arcs_of({{1, 3}, {2, 4}}));
  EXPECT_EQ(left_twist(arcs_of({{1, 4}, {2, 3}})), arcs_of({{1, 3}, {2, 4}}));
  // Runs of length one are left alone.
  EXPECT_EQ(right_twist(arcs_of({{1, 2}, {3, 4}})), arcs_of({{1, 2}, {3, 4}}));
}

TEST(Twist, InvolutionsPreservingSize) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_matching(n, [&](const Matching& m) {
      const Matching l = left_twist(m);
      const Matching r = right_twist(m);
      ASSERT_EQ(l.size(), n);
      ASSERT_EQ(r.size(), n);
      ASSERT_EQ(left_twist(l), m);
      ASSERT_EQ(right_twist(r), m);
    });
  }
}

TEST(Twist, KeepsEndpointKinds) {
  for_each_matching(5, [](const Matching& m) {
    const Matching l = left_twist(m);
    for (Point i = 1; i <= m.points(); ++i) ASSERT_EQ(l.is_opener(i), m.is_opener(i));
  });
}

}  // namespace
}  // namespace endhered
