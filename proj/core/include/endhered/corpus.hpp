#pragma once

// Batch censuses of endhered patterns over collections of dot-bracket
// records, on the raw matchings and on their collapsed shapes.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "endhered/pattern.hpp"
#include "endhered/structure.hpp"

namespace endhered {

struct CorpusRecord {
  std::string id;
  std::string structure;
  std::string tool;  // optional annotation source, empty when absent
};

enum class CorpusFormat { tsv, jsonl };

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  /// 1-based input line, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// TSV: "id<TAB>dotbracket" per line, blank and '#' lines skipped.
/// JSONL: {"id": ..., "structure": ..., "tool"?: ...} per line.
/// Records keep file order; structures are not parsed here. Duplicate ids
/// are kept and reported through warnings.
std::vector<CorpusRecord> read_corpus(std::istream& in, CorpusFormat format,
                                      std::vector<std::string>* warnings = nullptr);
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path, CorpusFormat format,
                                      std::vector<std::string>* warnings = nullptr);

/// Report keys: the id, or "id@tool" (falling back to "id#<ordinal>") when
/// the id occurs more than once.
std::vector<std::string> record_labels(std::span<const CorpusRecord> records);

/// 21, 12, 231, 312, 132, 321, 213, 123.
std::vector<EndheredPattern> default_census_patterns();

struct PatternCensus {
  std::vector<std::string> ids;               // input order, count >= 1 only
  std::map<std::string, std::size_t> counts;  // label -> occurrences
};

struct PatternReport {
  EndheredPattern pattern;
  PatternCensus secondary;
  PatternCensus shape;
};

struct ParseFailure {
  std::string id;
  std::string message;
  std::size_t position = 0;
};

struct CorpusReport {
  std::size_t records = 0;
  std::vector<PatternReport> patterns;
  std::vector<ParseFailure> failures;
  /// Labels whose shape needed more than one collapse pass.
  std::vector<std::string> multi_pass_collapses;
};

CorpusReport analyze(std::span<const CorpusRecord> records,
                     std::span<const EndheredPattern> patterns,
                     const BracketAlphabet& alphabet = BracketAlphabet::standard());

struct ScatterRow {
  std::string id;
  std::size_t size = 0;
  std::size_t count_21 = 0;
  std::size_t count_321 = 0;
};

/// Rows for records with at least one occurrence of 21 or 321; records that
/// fail to parse are skipped.
std::vector<ScatterRow> scatter_data(std::span<const CorpusRecord> records,
                                     const BracketAlphabet& alphabet = BracketAlphabet::standard());

/// Number of bracket types used -> labels, from the raw structure strings.
std::map<std::size_t, std::vector<std::string>> bracket_type_stats(
    std::span<const CorpusRecord> records,
    const BracketAlphabet& alphabet = BracketAlphabet::standard());

void write_report_text(std::ostream& os, const CorpusReport& report);
/// Keys in census order: {"21": {"secondary": {"ids": [...], "counts":
/// {...}}, "shape": {...}}, ..., "records": N, "failures": [...]}
void write_report_json(std::ostream& os, const CorpusReport& report);
/// Header "id,size,count_21,count_321".
void write_scatter_csv(std::ostream& os, std::span<const ScatterRow> rows);
void write_scatter_json(std::ostream& os, std::span<const ScatterRow> rows);

}  // namespace endhered
