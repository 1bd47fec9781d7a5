#include "endhered/pattern.hpp"

#include <algorithm>
#include <numeric>

#include "endhered/parallel.hpp"

namespace endhered {

EndheredPattern::EndheredPattern(std::vector<std::uint32_t> perm) : perm_(std::move(perm)) {
  const std::size_t p = perm_.size();
  if (p == 0) throw std::invalid_argument("pattern must have at least one element");
  inverse_.assign(p, 0);
  for (std::size_t s = 0; s < p; ++s) {
    const std::uint32_t v = perm_[s];
    if (v < 1 || v > p || inverse_[v - 1] != 0) {
      throw std::invalid_argument("pattern is not a permutation of 1.." + std::to_string(p));
    }
    inverse_[v - 1] = static_cast<std::uint32_t>(s + 1);
  }
}

EndheredPattern EndheredPattern::parse(std::string_view text) {
  std::vector<std::uint32_t> perm;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view field = text.substr(pos, comma - pos);
      if (field.empty() || !std::all_of(field.begin(), field.end(), ::isdigit)) {
        throw std::invalid_argument("malformed pattern '" + std::string(text) + "'");
      }
      perm.push_back(static_cast<std::uint32_t>(std::stoul(std::string(field))));
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("malformed pattern '" + std::string(text) + "'");
      }
      perm.push_back(static_cast<std::uint32_t>(c - '0'));
    }
  }
  return EndheredPattern(std::move(perm));
}

EndheredPattern EndheredPattern::from_matching(const Matching& m) {
  const std::size_t p = m.size();
  std::vector<std::uint32_t> inv(p);
  for (Point s = 1; s <= p; ++s) {
    const Point end = m.partner(s);
    if (end <= p) throw std::invalid_argument("matching is not permutational");
    inv[s - 1] = static_cast<std::uint32_t>(end - p);
  }
  std::vector<std::uint32_t> perm(p);
  for (std::size_t s = 0; s < p; ++s) perm[inv[s] - 1] = static_cast<std::uint32_t>(s + 1);
  return EndheredPattern(std::move(perm));
}

std::vector<EndheredPattern> EndheredPattern::all_of_size(std::size_t p) {
  std::vector<std::uint32_t> perm(p);
  std::iota(perm.begin(), perm.end(), 1u);
  std::vector<EndheredPattern> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string EndheredPattern::to_string() const {
  const bool digits = size() <= 9;
  std::string out;
  for (std::size_t s = 0; s < size(); ++s) {
    if (!digits && s > 0) out += ',';
    out += std::to_string(perm_[s]);
  }
  return out;
}

Matching as_matching(const EndheredPattern& pat) {
  const std::size_t p = pat.size();
  std::vector<Arc> arcs;
  arcs.reserve(p);
  for (std::size_t s = 0; s < p; ++s) {
    arcs.push_back({static_cast<Point>(s + 1), static_cast<Point>(pat.inverse()[s] + p)});
  }
  return Matching::from_arcs(arcs, p);
}

EndheredPattern right_twist(const EndheredPattern& pat) {
  return EndheredPattern::from_matching(right_twist(as_matching(pat)));
}

EndheredPattern left_twist(const EndheredPattern& pat) {
  return EndheredPattern::from_matching(left_twist(as_matching(pat)));
}

namespace {

template <class Emit>
void scan_occurrences(const Matching& m, const EndheredPattern& pat, Emit&& emit) {
  const auto& mu = m.to_permutation();
  const auto& inv = pat.inverse();
  const std::size_t p = pat.size();
  const std::size_t points = m.points();
  if (points < 2 * p) return;
  for (std::size_t i = 0; i + p <= points; ++i) {
    if (mu[i] <= inv[0]) continue;
    const std::size_t j = mu[i] - inv[0];
    if (j < i + p || j + p > points) continue;
    bool match = true;
    for (std::size_t s = 1; s < p && match; ++s) match = mu[i + s] == inv[s] + j;
    if (match) emit(Occurrence{static_cast<Point>(i + 1), static_cast<Point>(j + 1)});
  }
}

void check_guard(std::size_t n, const BruteForceOptions& options) {
  if (n > options.max_n && !options.allow_large) {
    throw SizeGuardError("brute force over size " + std::to_string(n) +
                         " exceeds the guard of " + std::to_string(options.max_n) +
                         " (pass allow_large to override)");
  }
}

// Exhaustive scan split by the partner of point 1; visit(part, m) is called
// for every matching, with part in [0, parts).
template <class Visit>
void scan_partitioned(std::size_t n, std::size_t parts, Visit&& visit) {
  if (n == 0) {
    visit(std::size_t{0}, Matching{});
    return;
  }
  parallel_for(parts, [&](std::size_t part) {
    MatchingStream stream(n, static_cast<Point>(part + 2));
    Matching m;
    while (stream.next(m)) visit(part, static_cast<const Matching&>(m));
  });
}

std::size_t part_count(std::size_t n) { return n == 0 ? 1 : 2 * n - 1; }

}  // namespace

std::vector<Occurrence> find_occurrences(const Matching& m, const EndheredPattern& pat) {
  std::vector<Occurrence> out;
  scan_occurrences(m, pat, [&](const Occurrence& o) { out.push_back(o); });
  return out;
}

std::size_t count_occurrences(const Matching& m, const EndheredPattern& pat) {
  std::size_t count = 0;
  scan_occurrences(m, pat, [&](const Occurrence&) { ++count; });
  return count;
}

std::vector<Distribution> distributions_bruteforce(std::size_t n,
                                                   std::span<const EndheredPattern> patterns,
                                                   const BruteForceOptions& options) {
  check_guard(n, options);
  const std::size_t parts = part_count(n);
  std::vector<std::vector<Distribution>> partial(parts,
                                                 std::vector<Distribution>(patterns.size()));
  scan_partitioned(n, parts, [&](std::size_t part, const Matching& m) {
    for (std::size_t q = 0; q < patterns.size(); ++q) {
      ++partial[part][q][count_occurrences(m, patterns[q])];
    }
  });
  std::vector<Distribution> out(patterns.size());
  for (const auto& slot : partial) {
    for (std::size_t q = 0; q < patterns.size(); ++q) {
      for (const auto& [k, c] : slot[q]) out[q][k] += c;
    }
  }
  return out;
}

Distribution distribution_bruteforce(std::size_t n, const EndheredPattern& pat,
                                     const BruteForceOptions& options) {
  return distributions_bruteforce(n, std::span(&pat, 1), options).front();
}

JointDistribution joint_distribution_bruteforce(std::size_t n, const EndheredPattern& first,
                                                const EndheredPattern& second,
                                                const BruteForceOptions& options) {
  check_guard(n, options);
  const std::size_t parts = part_count(n);
  std::vector<JointDistribution> partial(parts);
  scan_partitioned(n, parts, [&](std::size_t part, const Matching& m) {
    ++partial[part][{count_occurrences(m, first), count_occurrences(m, second)}];
  });
  JointDistribution out;
  for (const auto& slot : partial) {
    for (const auto& [km, c] : slot) out[km] += c;
  }
  return out;
}

std::vector<std::vector<EndheredPattern>> wilf_classes(std::size_t p, std::size_t max_n,
                                                       const BruteForceOptions& options) {
  if (p == 0 || p > 6 || (p > 3 && !options.allow_large)) {
    throw SizeGuardError("wilf_classes supports pattern sizes 1..3 (up to 6 with allow_large)");
  }
  check_guard(max_n, options);
  const auto patterns = EndheredPattern::all_of_size(p);
  std::vector<std::vector<Distribution>> profile(patterns.size());
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto dists = distributions_bruteforce(n, patterns, options);
    for (std::size_t q = 0; q < patterns.size(); ++q) profile[q].push_back(dists[q]);
  }
  std::vector<std::vector<EndheredPattern>> classes;
  std::vector<std::size_t> representative;
  for (std::size_t q = 0; q < patterns.size(); ++q) {
    auto it = std::find_if(representative.begin(), representative.end(),
                           [&](std::size_t r) { return profile[r] == profile[q]; });
    if (it == representative.end()) {
      representative.push_back(q);
      classes.push_back({patterns[q]});
    } else {
      classes[static_cast<std::size_t>(it - representative.begin())].push_back(patterns[q]);
    }
  }
  return classes;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kSamplesPerChunk = 4096;

}  // namespace

std::map<std::size_t, double> monte_carlo_distribution(std::size_t n, const EndheredPattern& pat,
                                                       std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo_distribution: samples must be >= 1");
  // Chunks carry their own derived seed, so the result does not depend on
  // how chunks are distributed over threads.
  const std::size_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  std::vector<std::map<std::size_t, std::uint64_t>> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng(splitmix64(seed ^ splitmix64(c)));
    const std::size_t begin = c * kSamplesPerChunk;
    const std::size_t end = std::min(samples, begin + kSamplesPerChunk);
    for (std::size_t s = begin; s < end; ++s) {
      ++partial[c][count_occurrences(random_matching(n, rng), pat)];
    }
  });
  std::map<std::size_t, std::uint64_t> counts;
  for (const auto& slot : partial) {
    for (const auto& [k, c] : slot) counts[k] += c;
  }
  std::map<std::size_t, double> out;
  for (const auto& [k, c] : counts) {
    out[k] = static_cast<double>(c) / static_cast<double>(samples);
  }
  return out;
}

}  // namespace endhered
