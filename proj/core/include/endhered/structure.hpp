#pragma once

// RNA secondary structures in extended dot-bracket notation and their
// conversion to perfect matchings.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "endhered/matching.hpp"

namespace endhered {

/// Base pair (i, j) with 1 <= i < j <= length.
struct BasePair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const BasePair&, const BasePair&) = default;
};

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dot-bracket syntax error at a 1-based text position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class LetterCase { lower_opens, upper_opens };

/// Ordered bracket types; type 0 is the preferred one when serializing.
class BracketAlphabet {
 public:
  explicit BracketAlphabet(std::vector<std::pair<char, char>> types);

  /// "()", "[]", "{}", "<>", then "aA" .. "zZ" (lowercase opens unless
  /// flipped).
  static BracketAlphabet standard(LetterCase letters = LetterCase::lower_opens);

  std::size_t size() const noexcept { return types_.size(); }
  char opener(std::size_t t) const { return types_.at(t).first; }
  char closer(std::size_t t) const { return types_.at(t).second; }

  std::optional<std::size_t> opener_type(char c) const;
  std::optional<std::size_t> closer_type(char c) const;

 private:
  std::vector<std::pair<char, char>> types_;
  std::array<int, 256> open_{};
  std::array<int, 256> close_{};
};

class SecondaryStructure {
 public:
  SecondaryStructure() = default;
  /// Throws StructureError unless every pair satisfies 1 <= i < j <= length
  /// and no position is used twice. Pairs are stored sorted by i.
  SecondaryStructure(std::size_t length, std::vector<BasePair> pairs);

  std::size_t length() const noexcept { return length_; }
  const std::vector<BasePair>& pairs() const noexcept { return pairs_; }

  friend bool operator==(const SecondaryStructure&, const SecondaryStructure&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<BasePair> pairs_;
};

/// Stack-per-bracket-type parse. Throws ParseError on an unknown character,
/// a closer with an empty stack, or unclosed openers.
SecondaryStructure parse_dotbracket(std::string_view text,
                                    const BracketAlphabet& alphabet = BracketAlphabet::standard());

/// First-come-first-served layout: pairs in ascending opener order take the
/// lowest bracket type none of whose pairs they cross. Throws StructureError
/// when the alphabet runs out of types.
std::string serialize_dotbracket(const SecondaryStructure& s,
                                 const BracketAlphabet& alphabet = BracketAlphabet::standard());
std::string serialize_dotbracket(const Matching& m,
                                 const BracketAlphabet& alphabet = BracketAlphabet::standard());

struct ValidationReport {
  std::size_t theta = 0;
  std::vector<std::pair<BasePair, BasePair>> monogamy_violations;
  std::vector<BasePair> distance_violations;
  std::vector<std::pair<BasePair, BasePair>> pseudoknot_violations;

  bool ok() const noexcept {
    return monogamy_violations.empty() && distance_violations.empty() &&
           pseudoknot_violations.empty();
  }
};

/// Checks monogamy, j - i >= theta, and absence of crossings on an arbitrary
/// pair list; violations are reported, never thrown.
ValidationReport validate_waterman_ponty(std::span<const BasePair> pairs, std::size_t theta);
ValidationReport validate_waterman_ponty(const SecondaryStructure& s, std::size_t theta);

/// Drops unpaired positions and reindexes the rest as 1..2m.
Matching to_matching(const SecondaryStructure& s);
/// Structure of length 2n with the arcs of m as pairs.
SecondaryStructure from_matching(const Matching& m);

struct CollapseResult {
  Matching shape;
  /// Number of passes that removed at least one arc.
  std::size_t changing_passes = 0;
};

/// Removes every arc (i, j) whose inner neighbour (i+1, j-1) is also an
/// arc, reindexes, and repeats until nothing changes.
CollapseResult collapse_shape_traced(const Matching& m);
Matching collapse_shape(const Matching& m);

/// Number of distinct bracket types occurring in a dot-bracket string.
/// Characters outside the alphabet are ignored.
std::size_t bracket_types_used(std::string_view text,
                               const BracketAlphabet& alphabet = BracketAlphabet::standard());

}  // namespace endhered
