#include "endhered/matching.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace endhered {

Matching Matching::from_arcs(std::span<const Arc> arcs, std::size_t n) {
  const std::size_t points = 2 * n;
  std::vector<Point> partner(points, 0);
  for (const Arc& arc : arcs) {
    const Point a = arc.left;
    const Point b = arc.right;
    for (Point p : {a, b}) {
      if (p < 1 || p > points) {
        throw MatchingError("point " + std::to_string(p) + " out of range 1.." +
                            std::to_string(points));
      }
    }
    if (a == b) throw MatchingError("point " + std::to_string(a) + " paired with itself");
    for (Point p : {a, b}) {
      if (partner[p - 1] != 0) throw MatchingError("duplicate point " + std::to_string(p));
    }
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  for (std::size_t i = 0; i < points; ++i) {
    if (partner[i] == 0) throw MatchingError("uncovered point " + std::to_string(i + 1));
  }
  return Matching(std::move(partner));
}

Matching Matching::from_permutation(std::span<const Point> perm) {
  if (perm.size() % 2 != 0) throw MatchingError("permutation of odd length");
  const std::size_t points = perm.size();
  for (std::size_t i = 0; i < points; ++i) {
    const Point p = perm[i];
    if (p < 1 || p > points) throw MatchingError("value " + std::to_string(p) + " out of range");
    if (p == i + 1) throw MatchingError("fixed point " + std::to_string(p));
    if (perm[p - 1] != i + 1) {
      throw MatchingError("not an involution at point " + std::to_string(i + 1));
    }
  }
  return Matching(std::vector<Point>(perm.begin(), perm.end()));
}

Matching Matching::parse(std::string_view text) {
  std::vector<Arc> arcs;
  std::size_t pos = 0;
  auto read_number = [&](Point& out) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first) {
      throw MatchingError("malformed arc near offset " + std::to_string(pos));
    }
    pos += static_cast<std::size_t>(ptr - first);
  };
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    Arc arc;
    read_number(arc.left);
    if (pos >= text.size() || text[pos] != '-') {
      throw MatchingError("expected '-' at offset " + std::to_string(pos));
    }
    ++pos;
    read_number(arc.right);
    arcs.push_back(arc);
  }
  return from_arcs(arcs, arcs.size());
}

std::vector<Arc> Matching::arcs() const {
  std::vector<Arc> out;
  out.reserve(size());
  for (Point i = 1; i <= points(); ++i) {
    if (is_opener(i)) out.push_back({i, partner(i)});
  }
  return out;
}

std::string Matching::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const Arc& a : arcs()) {
    if (!first) os << ' ';
    os << a.left << '-' << a.right;
    first = false;
  }
  return os.str();
}

// Stream state is an odometer: digits_[t] selects, among the points still
// free after the smallest one is taken, the partner of that smallest point.
// digits_[t] ranges over [0, 2(n-t)-1).

MatchingStream::MatchingStream(std::size_t n) : n_(n), digits_(n, 0) {}

MatchingStream::MatchingStream(std::size_t n, Point first_partner) : MatchingStream(n) {
  if (n == 0 || first_partner < 2 || first_partner > 2 * n) {
    throw MatchingError("first partner " + std::to_string(first_partner) +
                        " out of range for size " + std::to_string(n));
  }
  digits_[0] = first_partner - 2;
  fixed_first_ = true;
}

bool MatchingStream::next(Matching& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    decode(out);
    return true;
  }
  const std::size_t lowest = fixed_first_ ? 1 : 0;
  std::size_t t = n_;
  while (t > lowest) {
    --t;
    const std::uint32_t radix = static_cast<std::uint32_t>(2 * (n_ - t) - 1);
    if (++digits_[t] < radix) {
      decode(out);
      return true;
    }
    digits_[t] = 0;
  }
  done_ = true;
  return false;
}

void MatchingStream::decode(Matching& out) const {
  std::vector<Point> free(2 * n_);
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<Point>(i + 1);
  std::vector<Arc> arcs(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    const Point a = free.front();
    free.erase(free.begin());
    const auto it = free.begin() + digits_[t];
    arcs[t] = {a, *it};
    free.erase(it);
  }
  out = Matching::from_arcs(arcs, n_);
}

std::vector<Matching> enumerate_matchings(std::size_t n) {
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
  return out;
}

namespace {
__extension__ using Wide = unsigned __int128;
}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Lemire's multiply-shift with rejection; independent of the standard
  // library's distribution implementation, so streams are portable.
  Wide product = static_cast<Wide>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<Wide>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

Matching random_matching(std::size_t n, Rng& rng) {
  const std::size_t points = 2 * n;
  // pool holds the unpaired points; where[p] is p's slot in pool.
  std::vector<Point> pool(points);
  std::vector<std::size_t> where(points + 1);
  for (std::size_t i = 0; i < points; ++i) {
    pool[i] = static_cast<Point>(i + 1);
    where[i + 1] = i;
  }
  auto remove = [&](Point p) {
    const std::size_t slot = where[p];
    const Point last = pool.back();
    pool[slot] = last;
    where[last] = slot;
    pool.pop_back();
  };
  std::vector<Point> partner(points, 0);
  for (Point a = 1; a <= points; ++a) {
    if (partner[a - 1] != 0) continue;
    remove(a);
    const Point b = pool[uniform_below(rng, pool.size())];
    remove(b);
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return Matching::from_permutation(partner);
}

Matching random_matching(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_matching(n, rng);
}

namespace {

Matching twist(const Matching& m, bool openers) {
  std::vector<Point> partner = m.to_permutation();
  const auto& old = m.to_permutation();
  const Point points = static_cast<Point>(m.points());
  Point i = 1;
  while (i <= points) {
    if (m.is_opener(i) != openers) {
      ++i;
      continue;
    }
    Point j = i;
    while (j + 1 <= points && m.is_opener(j + 1) == openers) ++j;
    for (Point t = 0; t <= j - i; ++t) {
      const Point other = old[j - t - 1];
      partner[i + t - 1] = other;
      partner[other - 1] = i + t;
    }
    i = j + 1;
  }
  return Matching::from_permutation(partner);
}

}  // namespace

Matching left_twist(const Matching& m) { return twist(m, true); }
Matching right_twist(const Matching& m) { return twist(m, false); }

}  // namespace endhered
