#include "endhered/corpus.hpp"

#include <fstream>
#include <optional>
#include <unordered_map>

#include <json.hpp>

#include "endhered/parallel.hpp"

namespace endhered {

namespace {

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

std::vector<CorpusRecord> read_corpus(std::istream& in, CorpusFormat format,
                                      std::vector<std::string>* warnings) {
  std::vector<CorpusRecord> records;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_cr(raw);
    if (blank(line)) continue;
    CorpusRecord rec;
    if (format == CorpusFormat::tsv) {
      if (line.front() == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string_view::npos) {
        throw CorpusError("line " + std::to_string(line_no) + ": expected id<TAB>structure",
                          line_no);
      }
      rec.id = std::string(line.substr(0, tab));
      rec.structure = std::string(line.substr(tab + 1));
      if (rec.structure.find('\t') != std::string::npos) {
        throw CorpusError("line " + std::to_string(line_no) + ": more than two fields", line_no);
      }
    } else {
      nlohmann::json obj;
      try {
        obj = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw CorpusError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
      }
      if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
          !obj.contains("structure") || !obj["structure"].is_string() ||
          (obj.contains("tool") && !obj["tool"].is_string())) {
        throw CorpusError("line " + std::to_string(line_no) +
                              ": expected {\"id\": string, \"structure\": string, \"tool\"?: string}",
                          line_no);
      }
      rec.id = obj["id"].get<std::string>();
      rec.structure = obj["structure"].get<std::string>();
      if (obj.contains("tool")) rec.tool = obj["tool"].get<std::string>();
    }
    if (rec.id.empty()) throw CorpusError("line " + std::to_string(line_no) + ": empty id", line_no);
    const auto [it, inserted] = first_line.emplace(rec.id, line_no);
    if (!inserted && warnings) {
      warnings->push_back("line " + std::to_string(line_no) + ": duplicate id '" + rec.id +
                          "' (first seen on line " + std::to_string(it->second) + ")");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path, CorpusFormat format,
                                      std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read corpus file '" + path.string() + "'", 0);
  return read_corpus(in, format, warnings);
}

std::vector<std::string> record_labels(std::span<const CorpusRecord> records) {
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& r : records) ++seen[r.id];
  std::vector<std::string> labels;
  labels.reserve(records.size());
  std::unordered_map<std::string, std::size_t> used;
  std::unordered_map<std::string, std::size_t> ordinal;
  for (const auto& r : records) {
    std::string label = r.id;
    if (seen[r.id] > 1) {
      label = r.tool.empty() ? r.id + "#" + std::to_string(++ordinal[r.id]) : r.id + "@" + r.tool;
    }
    // Same id and same tool twice: fall back to ordinals so labels stay unique.
    if (used[label]++ > 0) label += "#" + std::to_string(used[label]);
    labels.push_back(std::move(label));
  }
  return labels;
}

std::vector<EndheredPattern> default_census_patterns() {
  std::vector<EndheredPattern> out;
  for (const char* p : {"21", "12", "231", "312", "132", "321", "213", "123"}) {
    out.push_back(EndheredPattern::parse(p));
  }
  return out;
}

namespace {

struct RecordResult {
  std::optional<ParseFailure> failure;
  std::vector<std::size_t> secondary;
  std::vector<std::size_t> shape;
  std::size_t collapse_passes = 0;
};

}  // namespace

CorpusReport analyze(std::span<const CorpusRecord> records,
                     std::span<const EndheredPattern> patterns, const BracketAlphabet& alphabet) {
  std::vector<RecordResult> results(records.size());
  parallel_for(records.size(), [&](std::size_t r) {
    RecordResult& out = results[r];
    try {
      const Matching m = to_matching(parse_dotbracket(records[r].structure, alphabet));
      const CollapseResult shape = collapse_shape_traced(m);
      out.collapse_passes = shape.changing_passes;
      for (const auto& pat : patterns) {
        out.secondary.push_back(count_occurrences(m, pat));
        out.shape.push_back(count_occurrences(shape.shape, pat));
      }
    } catch (const ParseError& e) {
      out.failure = ParseFailure{records[r].id, e.what(), e.position()};
    }
  });

  const auto labels = record_labels(records);
  CorpusReport report;
  report.records = records.size();
  for (const auto& pat : patterns) report.patterns.push_back({pat, {}, {}});
  for (std::size_t r = 0; r < records.size(); ++r) {
    const RecordResult& res = results[r];
    if (res.failure) {
      report.failures.push_back(*res.failure);
      report.failures.back().id = labels[r];
      continue;
    }
    if (res.collapse_passes > 1) report.multi_pass_collapses.push_back(labels[r]);
    for (std::size_t q = 0; q < patterns.size(); ++q) {
      auto add = [&](PatternCensus& census, std::size_t count) {
        if (count == 0) return;
        census.ids.push_back(labels[r]);
        census.counts[labels[r]] = count;
      };
      add(report.patterns[q].secondary, res.secondary[q]);
      add(report.patterns[q].shape, res.shape[q]);
    }
  }
  return report;
}

std::vector<ScatterRow> scatter_data(std::span<const CorpusRecord> records,
                                     const BracketAlphabet& alphabet) {
  const auto p21 = EndheredPattern::parse("21");
  const auto p321 = EndheredPattern::parse("321");
  const auto labels = record_labels(records);
  std::vector<std::optional<ScatterRow>> rows(records.size());
  parallel_for(records.size(), [&](std::size_t r) {
    try {
      const Matching m = to_matching(parse_dotbracket(records[r].structure, alphabet));
      ScatterRow row{labels[r], m.size(), count_occurrences(m, p21), count_occurrences(m, p321)};
      if (row.count_21 > 0 || row.count_321 > 0) rows[r] = std::move(row);
    } catch (const ParseError&) {
    }
  });
  std::vector<ScatterRow> out;
  for (auto& row : rows) {
    if (row) out.push_back(std::move(*row));
  }
  return out;
}

std::map<std::size_t, std::vector<std::string>> bracket_type_stats(
    std::span<const CorpusRecord> records, const BracketAlphabet& alphabet) {
  const auto labels = record_labels(records);
  std::map<std::size_t, std::vector<std::string>> out;
  for (std::size_t r = 0; r < records.size(); ++r) {
    out[bracket_types_used(records[r].structure, alphabet)].push_back(labels[r]);
  }
  return out;
}

void write_report_text(std::ostream& os, const CorpusReport& report) {
  os << "records: " << report.records << "\n";
  os << "parse failures: " << report.failures.size() << "\n";
  for (const auto& f : report.failures) os << "  " << f.id << ": " << f.message << "\n";
  auto list = [&](const char* title, const PatternCensus& census) {
    os << "  " << title << ": " << census.ids.size();
    if (!census.ids.empty()) {
      os << " (";
      for (std::size_t i = 0; i < census.ids.size(); ++i) {
        if (i > 0) os << ", ";
        os << census.ids[i] << ':' << census.counts.at(census.ids[i]);
      }
      os << ")";
    }
    os << "\n";
  };
  for (const auto& p : report.patterns) {
    os << "pattern " << p.pattern.to_string() << "\n";
    list("secondary structure", p.secondary);
    list("shape", p.shape);
  }
}

namespace {

nlohmann::ordered_json census_json(const PatternCensus& census) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& id : census.ids) counts[id] = census.counts.at(id);
  return {{"ids", census.ids}, {"counts", counts}};
}

}  // namespace

void write_report_json(std::ostream& os, const CorpusReport& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& p : report.patterns) {
    doc[p.pattern.to_string()] = {{"secondary", census_json(p.secondary)},
                                  {"shape", census_json(p.shape)}};
  }
  doc["records"] = report.records;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"id", f.id}, {"position", f.position}, {"message", f.message}});
  }
  doc["failures"] = failures;
  os << doc.dump() << '\n';
}

void write_scatter_csv(std::ostream& os, std::span<const ScatterRow> rows) {
  os << "id,size,count_21,count_321\n";
  for (const auto& r : rows) {
    os << r.id << ',' << r.size << ',' << r.count_21 << ',' << r.count_321 << '\n';
  }
}

void write_scatter_json(std::ostream& os, std::span<const ScatterRow> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"id", r.id}, {"size", r.size}, {"count_21", r.count_21},
                   {"count_321", r.count_321}});
  }
  os << nlohmann::ordered_json{{"rows", arr}}.dump() << '\n';
}

}  // namespace endhered
