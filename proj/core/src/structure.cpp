#include "endhered/structure.hpp"

#include <algorithm>

namespace endhered {

namespace {

std::size_t byte(char c) { return static_cast<unsigned char>(c); }

bool crosses(const BasePair& a, const BasePair& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

}  // namespace

BracketAlphabet::BracketAlphabet(std::vector<std::pair<char, char>> types)
    : types_(std::move(types)) {
  open_.fill(-1);
  close_.fill(-1);
  for (std::size_t t = 0; t < types_.size(); ++t) {
    const auto [o, c] = types_[t];
    for (char ch : {o, c}) {
      if (ch == '.') throw StructureError("'.' cannot be a bracket character");
      if (open_[byte(ch)] >= 0 || close_[byte(ch)] >= 0 || o == c) {
        throw StructureError(std::string("bracket character '") + ch + "' used twice");
      }
    }
    open_[byte(o)] = static_cast<int>(t);
    close_[byte(c)] = static_cast<int>(t);
  }
}

BracketAlphabet BracketAlphabet::standard(LetterCase letters) {
  std::vector<std::pair<char, char>> types{{'(', ')'}, {'[', ']'}, {'{', '}'}, {'<', '>'}};
  for (char c = 'a'; c <= 'z'; ++c) {
    const char upper = static_cast<char>(c - 'a' + 'A');
    if (letters == LetterCase::lower_opens) {
      types.emplace_back(c, upper);
    } else {
      types.emplace_back(upper, c);
    }
  }
  return BracketAlphabet(std::move(types));
}

std::optional<std::size_t> BracketAlphabet::opener_type(char c) const {
  const int t = open_[byte(c)];
  if (t < 0) return std::nullopt;
  return static_cast<std::size_t>(t);
}

std::optional<std::size_t> BracketAlphabet::closer_type(char c) const {
  const int t = close_[byte(c)];
  if (t < 0) return std::nullopt;
  return static_cast<std::size_t>(t);
}

SecondaryStructure::SecondaryStructure(std::size_t length, std::vector<BasePair> pairs)
    : length_(length), pairs_(std::move(pairs)) {
  std::vector<bool> used(length + 1, false);
  for (const BasePair& p : pairs_) {
    if (p.i < 1 || p.j > length || p.i >= p.j) {
      throw StructureError("invalid base pair (" + std::to_string(p.i) + "," +
                           std::to_string(p.j) + ") for length " + std::to_string(length));
    }
    for (std::size_t x : {p.i, p.j}) {
      if (used[x]) throw StructureError("position " + std::to_string(x) + " paired twice");
      used[x] = true;
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
}

SecondaryStructure parse_dotbracket(std::string_view text, const BracketAlphabet& alphabet) {
  std::vector<std::vector<std::size_t>> stacks(alphabet.size());
  std::vector<BasePair> pairs;
  for (std::size_t pos = 1; pos <= text.size(); ++pos) {
    const char c = text[pos - 1];
    if (c == '.') continue;
    if (const auto t = alphabet.opener_type(c)) {
      stacks[*t].push_back(pos);
    } else if (const auto u = alphabet.closer_type(c)) {
      auto& stack = stacks[*u];
      if (stack.empty()) {
        throw ParseError("unmatched '" + std::string(1, c) + "' at position " + std::to_string(pos),
                         pos);
      }
      pairs.push_back({stack.back(), pos});
      stack.pop_back();
    } else {
      throw ParseError("unknown character '" + std::string(1, c) + "' at position " +
                           std::to_string(pos),
                       pos);
    }
  }
  std::vector<std::size_t> open;
  for (const auto& stack : stacks) open.insert(open.end(), stack.begin(), stack.end());
  if (!open.empty()) {
    std::sort(open.begin(), open.end());
    std::string where;
    for (std::size_t p : open) where += (where.empty() ? "" : ",") + std::to_string(p);
    throw ParseError("unclosed bracket(s) at position(s) " + where, open.front());
  }
  return SecondaryStructure(text.size(), std::move(pairs));
}

std::string serialize_dotbracket(const SecondaryStructure& s, const BracketAlphabet& alphabet) {
  std::string out(s.length(), '.');
  std::vector<std::vector<BasePair>> layers(alphabet.size());
  for (const BasePair& p : s.pairs()) {
    std::size_t t = 0;
    for (; t < layers.size(); ++t) {
      const bool conflict = std::any_of(layers[t].begin(), layers[t].end(),
                                        [&](const BasePair& q) { return crosses(p, q); });
      if (!conflict) break;
    }
    if (t == layers.size()) {
      throw StructureError("bracket alphabet exhausted at pair (" + std::to_string(p.i) + "," +
                           std::to_string(p.j) + ")");
    }
    layers[t].push_back(p);
    out[p.i - 1] = alphabet.opener(t);
    out[p.j - 1] = alphabet.closer(t);
  }
  return out;
}

std::string serialize_dotbracket(const Matching& m, const BracketAlphabet& alphabet) {
  return serialize_dotbracket(from_matching(m), alphabet);
}

ValidationReport validate_waterman_ponty(std::span<const BasePair> pairs, std::size_t theta) {
  ValidationReport report;
  report.theta = theta;
  std::vector<BasePair> sorted;
  sorted.reserve(pairs.size());
  for (BasePair p : pairs) {
    if (p.i > p.j) std::swap(p.i, p.j);
    sorted.push_back(p);
  }
  std::sort(sorted.begin(), sorted.end());
  for (const BasePair& p : sorted) {
    if (p.j - p.i < theta) report.distance_violations.push_back(p);
  }
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      const BasePair& x = sorted[a];
      const BasePair& y = sorted[b];
      if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j) {
        report.monogamy_violations.emplace_back(x, y);
      } else if (x.i < y.i && y.i < x.j && x.j < y.j) {
        report.pseudoknot_violations.emplace_back(x, y);
      }
    }
  }
  return report;
}

ValidationReport validate_waterman_ponty(const SecondaryStructure& s, std::size_t theta) {
  return validate_waterman_ponty(s.pairs(), theta);
}

Matching to_matching(const SecondaryStructure& s) {
  std::vector<std::size_t> rank(s.length() + 1, 0);
  for (const BasePair& p : s.pairs()) rank[p.i] = rank[p.j] = 1;
  std::size_t next = 0;
  for (std::size_t pos = 1; pos <= s.length(); ++pos) {
    if (rank[pos] != 0) rank[pos] = ++next;
  }
  std::vector<Arc> arcs;
  arcs.reserve(s.pairs().size());
  for (const BasePair& p : s.pairs()) {
    arcs.push_back({static_cast<Point>(rank[p.i]), static_cast<Point>(rank[p.j])});
  }
  return Matching::from_arcs(arcs, arcs.size());
}

SecondaryStructure from_matching(const Matching& m) {
  std::vector<BasePair> pairs;
  pairs.reserve(m.size());
  for (const Arc& a : m.arcs()) pairs.push_back({a.left, a.right});
  return SecondaryStructure(m.points(), std::move(pairs));
}

CollapseResult collapse_shape_traced(const Matching& m) {
  CollapseResult result{m, 0};
  while (true) {
    const Matching& cur = result.shape;
    std::vector<Arc> kept;
    for (const Arc& a : cur.arcs()) {
      const bool stacked = a.right - a.left >= 3 && cur.partner(a.left + 1) == a.right - 1;
      if (!stacked) kept.push_back(a);
    }
    if (kept.size() == cur.size()) break;
    std::vector<BasePair> pairs;
    for (const Arc& a : kept) pairs.push_back({a.left, a.right});
    result.shape = to_matching(SecondaryStructure(cur.points(), std::move(pairs)));
    ++result.changing_passes;
  }
  return result;
}

Matching collapse_shape(const Matching& m) { return collapse_shape_traced(m).shape; }

std::size_t bracket_types_used(std::string_view text, const BracketAlphabet& alphabet) {
  std::vector<bool> seen(alphabet.size(), false);
  for (char c : text) {
    if (auto t = alphabet.opener_type(c)) seen[*t] = true;
    else if (auto u = alphabet.closer_type(c)) seen[*u] = true;
  }
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

}  // namespace endhered
