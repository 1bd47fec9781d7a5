#include "cli.hpp"

#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "endhered/asymptotics.hpp"
#include "endhered/corpus.hpp"
#include "endhered/enumeration.hpp"
#include "endhered/matching.hpp"
#include "endhered/pattern.hpp"
#include "endhered/structure.hpp"
#include "endhered/table_io.hpp"

namespace endhered::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };

struct CliConfig {
  std::string format = "text";
  std::string pattern;
  std::vector<std::string> patterns;
  std::size_t max_n = 0;
  std::string matching;
  std::string dotbracket;
  std::string input;
  std::string corpus_format;
  std::string side;
  std::size_t theta = 0;
  std::size_t n = 0;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  bool allow_large = false;
  bool upper_opens = false;

  Format output() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::text;
  }

  BracketAlphabet alphabet() const {
    return BracketAlphabet::standard(upper_opens ? LetterCase::upper_opens
                                                 : LetterCase::lower_opens);
  }
};

void add_format(CLI::App* app, CliConfig& cfg) {
  app->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

// --matching and --dotbracket are exclusive; exactly one is required.
void add_structure_input(CLI::App* app, CliConfig& cfg) {
  auto* m = app->add_option("--matching", cfg.matching, "Matching as \"i-j i-j ...\"");
  auto* d = app->add_option("--dotbracket", cfg.dotbracket, "Extended dot-bracket structure");
  m->excludes(d);
  d->excludes(m);
  app->add_flag("--upper-opens", cfg.upper_opens,
                "Letter brackets open with the uppercase character (Aa instead of aA)");
  app->callback([app] {
    if (app->count("--matching") + app->count("--dotbracket") != 1) {
      throw CLI::RequiredError("exactly one of --matching or --dotbracket");
    }
  });
}

Matching input_matching(const CliConfig& cfg) {
  if (!cfg.matching.empty() || cfg.dotbracket.empty()) return Matching::parse(cfg.matching);
  return to_matching(parse_dotbracket(cfg.dotbracket, cfg.alphabet()));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  const auto pat = EndheredPattern::parse(cfg.pattern);
  const auto table = table_for_pattern(pat, cfg.max_n);
  if (!table) throw std::domain_error("no formula table for pattern " + pat.to_string() +
                                      " (sizes 2 and 3 only)");
  switch (cfg.output()) {
    case Format::text: write_table_text(out, *table); break;
    case Format::csv: write_table_csv(out, *table); break;
    case Format::json: write_table_json(out, *table); break;
  }
  return kOk;
}

int cmd_count(const CliConfig& cfg, std::ostream& out) {
  const auto pat = EndheredPattern::parse(cfg.pattern);
  const Matching m = input_matching(cfg);
  const auto occ = find_occurrences(m, pat);
  switch (cfg.output()) {
    case Format::text: out << occ.size() << '\n'; break;
    case Format::csv:
      out << "pattern,size,count\n" << pat.to_string() << ',' << m.size() << ',' << occ.size()
          << '\n';
      break;
    case Format::json: {
      Json positions = Json::array();
      for (const auto& o : occ) positions.push_back({o.start, o.end});
      out << Json{{"pattern", pat.to_string()},
                  {"size", m.size()},
                  {"count", occ.size()},
                  {"occurrences", positions}}
                 .dump()
          << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_twist(const CliConfig& cfg, std::ostream& out) {
  const Matching m = input_matching(cfg);
  const Matching t = cfg.side == "left" ? left_twist(m) : right_twist(m);
  switch (cfg.output()) {
    case Format::text: out << t.to_string() << '\n'; break;
    case Format::csv:
      out << "side,input,output\n" << cfg.side << ',' << m.to_string() << ',' << t.to_string()
          << '\n';
      break;
    case Format::json:
      out << Json{{"side", cfg.side},
                  {"input", m.to_string()},
                  {"output", t.to_string()},
                  {"dotbracket", serialize_dotbracket(t, cfg.alphabet())}}
                 .dump()
          << '\n';
      break;
  }
  return kOk;
}

int cmd_collapse(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Matching m = input_matching(cfg);
  const CollapseResult r = collapse_shape_traced(m);
  if (r.changing_passes > 1) {
    err << "note: collapse needed " << r.changing_passes << " passes to reach a fixed point\n";
  }
  const std::string shape = serialize_dotbracket(r.shape, cfg.alphabet());
  const std::string input = cfg.dotbracket.empty() ? m.to_string() : cfg.dotbracket;
  switch (cfg.output()) {
    case Format::text: out << shape << '\n'; break;
    case Format::csv: out << "input,shape\n" << csv_quote(input) << ',' << shape << '\n'; break;
    case Format::json:
      out << Json{{"input", input},
                  {"shape", shape},
                  {"matching", r.shape.to_string()},
                  {"passes", r.changing_passes}}
                 .dump()
          << '\n';
      break;
  }
  return kOk;
}

int cmd_validate(const CliConfig& cfg, std::ostream& out) {
  const SecondaryStructure s = cfg.dotbracket.empty()
                                   ? from_matching(Matching::parse(cfg.matching))
                                   : parse_dotbracket(cfg.dotbracket, cfg.alphabet());
  const ValidationReport rep = validate_waterman_ponty(s, cfg.theta);
  auto pair_str = [](const BasePair& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  };
  switch (cfg.output()) {
    case Format::text:
      out << (rep.ok() ? "valid" : "invalid") << " (theta=" << rep.theta << ")\n";
      for (const auto& [a, b] : rep.monogamy_violations)
        out << "monogamy " << pair_str(a) << ' ' << pair_str(b) << '\n';
      for (const auto& p : rep.distance_violations) out << "distance " << pair_str(p) << '\n';
      for (const auto& [a, b] : rep.pseudoknot_violations)
        out << "pseudoknot " << pair_str(a) << ' ' << pair_str(b) << '\n';
      break;
    case Format::csv:
      out << "condition,i,j,i2,j2\n";
      for (const auto& [a, b] : rep.monogamy_violations)
        out << "monogamy," << a.i << ',' << a.j << ',' << b.i << ',' << b.j << '\n';
      for (const auto& p : rep.distance_violations)
        out << "distance," << p.i << ',' << p.j << ",,\n";
      for (const auto& [a, b] : rep.pseudoknot_violations)
        out << "pseudoknot," << a.i << ',' << a.j << ',' << b.i << ',' << b.j << '\n';
      break;
    case Format::json: {
      auto pj = [](const BasePair& p) { return Json::array({p.i, p.j}); };
      Json mono = Json::array(), dist = Json::array(), knot = Json::array();
      for (const auto& [a, b] : rep.monogamy_violations) mono.push_back({pj(a), pj(b)});
      for (const auto& p : rep.distance_violations) dist.push_back(pj(p));
      for (const auto& [a, b] : rep.pseudoknot_violations) knot.push_back({pj(a), pj(b)});
      out << Json{{"theta", rep.theta},
                  {"valid", rep.ok()},
                  {"monogamy", mono},
                  {"distance", dist},
                  {"pseudoknot", knot}}
                 .dump()
          << '\n';
      break;
    }
  }
  return kOk;
}

CorpusFormat corpus_format(const CliConfig& cfg) {
  std::string fmt = cfg.corpus_format;
  if (fmt.empty()) {
    fmt = std::filesystem::path(cfg.input).extension() == ".jsonl" ? "jsonl" : "tsv";
  }
  return fmt == "jsonl" ? CorpusFormat::jsonl : CorpusFormat::tsv;
}

std::vector<EndheredPattern> census_patterns(const CliConfig& cfg) {
  if (cfg.patterns.empty()) return default_census_patterns();
  std::vector<EndheredPattern> out;
  for (const auto& p : cfg.patterns) {
    auto pat = EndheredPattern::parse(p);
    if (pat.size() > 3) throw std::domain_error("corpus censuses support pattern sizes up to 3");
    out.push_back(std::move(pat));
  }
  return out;
}

int cmd_corpus(const CliConfig& cfg, const std::string& action, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> warnings;
  const auto records = load_corpus(cfg.input, corpus_format(cfg), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  const auto alphabet = cfg.alphabet();

  if (action == "analyze") {
    const auto report = analyze(records, census_patterns(cfg), alphabet);
    for (const auto& id : report.multi_pass_collapses) {
      err << "note: shape of " << id << " needed more than one collapse pass\n";
    }
    switch (cfg.output()) {
      case Format::text: write_report_text(out, report); break;
      case Format::json: write_report_json(out, report); break;
      case Format::csv:
        out << "pattern,level,id,count\n";
        for (const auto& p : report.patterns) {
          for (const auto& id : p.secondary.ids)
            out << p.pattern.to_string() << ",secondary," << csv_quote(id) << ','
                << p.secondary.counts.at(id) << '\n';
          for (const auto& id : p.shape.ids)
            out << p.pattern.to_string() << ",shape," << csv_quote(id) << ','
                << p.shape.counts.at(id) << '\n';
        }
        break;
    }
    return kOk;
  }

  if (action == "scatter") {
    const auto rows = scatter_data(records, alphabet);
    switch (cfg.output()) {
      case Format::json: write_scatter_json(out, rows); break;
      default: write_scatter_csv(out, rows); break;
    }
    return kOk;
  }

  const auto stats = bracket_type_stats(records, alphabet);
  switch (cfg.output()) {
    case Format::text:
      for (const auto& [types, ids] : stats) {
        out << types << " type(s): " << ids.size();
        for (std::size_t i = 0; i < ids.size(); ++i) out << (i == 0 ? " (" : ", ") << ids[i];
        out << (ids.empty() ? "" : ")") << '\n';
      }
      break;
    case Format::csv:
      out << "id,bracket_types\n";
      for (const auto& [types, ids] : stats)
        for (const auto& id : ids) out << csv_quote(id) << ',' << types << '\n';
      break;
    case Format::json: {
      Json doc = Json::object();
      for (const auto& [types, ids] : stats) doc[std::to_string(types)] = ids;
      out << Json{{"bracket_types", doc}}.dump() << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  std::vector<EndheredPattern> patterns;
  if (cfg.patterns.empty()) {
    patterns = default_census_patterns();
  } else {
    for (const auto& p : cfg.patterns) patterns.push_back(EndheredPattern::parse(p));
  }
  BruteForceOptions options;
  options.allow_large = cfg.allow_large;

  struct Row {
    std::string pattern;
    std::size_t n;
    bool match;
  };
  std::vector<std::optional<DistributionTable>> tables;
  for (const auto& p : patterns) {
    auto t = table_for_pattern(p, cfg.max_n);
    if (!t) throw std::domain_error("no formula table for pattern " + p.to_string());
    tables.push_back(std::move(t));
  }
  std::vector<Row> rows;
  bool all = true;
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    const auto brute = distributions_bruteforce(n, patterns, options);
    for (std::size_t q = 0; q < patterns.size(); ++q) {
      bool match = true;
      for (std::size_t k = 0; k < tables[q]->row_width(n) && match; ++k) {
        const auto it = brute[q].find(k);
        const std::uint64_t got = it == brute[q].end() ? 0 : it->second;
        match = tables[q]->at(n, k) == got;
      }
      for (const auto& [k, c] : brute[q]) match = match && tables[q]->at(n, k) == c;
      all = all && match;
      rows.push_back({patterns[q].to_string(), n, match});
    }
  }
  switch (cfg.output()) {
    case Format::text:
      for (const auto& r : rows)
        out << "pattern " << r.pattern << " n=" << r.n << ' ' << (r.match ? "ok" : "MISMATCH")
            << '\n';
      out << (all ? "all tables agree with brute force" : "MISMATCH found") << '\n';
      break;
    case Format::csv:
      out << "pattern,n,match\n";
      for (const auto& r : rows) out << r.pattern << ',' << r.n << ',' << (r.match ? 1 : 0) << '\n';
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back({{"pattern", r.pattern}, {"n", r.n}, {"match", r.match}});
      out << Json{{"max_n", cfg.max_n}, {"results", arr}, {"all_match", all}}.dump() << '\n';
      break;
    }
  }
  return all ? kOk : kDomainError;
}

int cmd_sample(const CliConfig& cfg, std::ostream& out) {
  const auto pat = EndheredPattern::parse(cfg.pattern.empty() ? "21" : cfg.pattern);
  const auto pmf = monte_carlo_distribution(cfg.n, pat, cfg.samples, cfg.seed);
  const double tv = tv_distance_to_poisson_half(pmf);
  const std::size_t top = pmf.empty() ? 0 : pmf.rbegin()->first;
  auto freq = [&](std::size_t k) {
    const auto it = pmf.find(k);
    return it == pmf.end() ? 0.0 : it->second;
  };
  switch (cfg.output()) {
    case Format::text:
      out << "pattern " << pat.to_string() << " n=" << cfg.n << " samples=" << cfg.samples
          << " seed=" << cfg.seed << '\n';
      out << "k empirical poisson(1/2)\n";
      for (std::size_t k = 0; k <= top; ++k) {
        out << k << ' ' << fixed(freq(k)) << ' ' << fixed(poisson_half_pmf(static_cast<std::int64_t>(k)))
            << '\n';
      }
      out << "tv_distance " << fixed(tv) << '\n';
      break;
    case Format::csv:
      out << "k,empirical,poisson\n";
      for (std::size_t k = 0; k <= top; ++k) {
        out << k << ',' << fixed(freq(k)) << ',' << fixed(poisson_half_pmf(static_cast<std::int64_t>(k)))
            << '\n';
      }
      break;
    case Format::json: {
      Json arr = Json::array();
      for (std::size_t k = 0; k <= top; ++k) {
        arr.push_back({{"k", k},
                       {"empirical", freq(k)},
                       {"poisson", poisson_half_pmf(static_cast<std::int64_t>(k))}});
      }
      out << Json{{"pattern", pat.to_string()}, {"n", cfg.n},     {"samples", cfg.samples},
                  {"seed", cfg.seed},           {"pmf", arr},     {"tv_distance", tv}}
                 .dump()
          << '\n';
      break;
    }
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Endhered patterns in perfect matchings and RNA secondary structures",
               args.empty() ? "endhered" : args.front()};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "Exact distribution table for a pattern");
  enumerate->add_option("--pattern", cfg.pattern, "Pattern of size 2 or 3, e.g. 21")->required();
  cfg.max_n = 9;
  enumerate->add_option("--max-n", cfg.max_n, "Largest matching size")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  add_format(enumerate, cfg);

  auto* count = app.add_subcommand("count", "Count pattern occurrences in one structure");
  count->add_option("--pattern", cfg.pattern, "Pattern in digit form")->required();
  add_structure_input(count, cfg);
  add_format(count, cfg);

  auto* twist = app.add_subcommand("twist", "Apply the left or right endhered twist");
  twist->add_option("--side", cfg.side, "Twist side")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  add_structure_input(twist, cfg);
  add_format(twist, cfg);

  auto* collapse = app.add_subcommand("collapse", "Collapse a structure to its shape");
  add_structure_input(collapse, cfg);
  add_format(collapse, cfg);

  auto* validate = app.add_subcommand("validate", "Check the Waterman-Ponty conditions");
  add_structure_input(validate, cfg);
  validate->add_option("--theta", cfg.theta, "Minimal distance j - i")->capture_default_str();
  add_format(validate, cfg);

  auto* corpus = app.add_subcommand("corpus", "Pattern censuses over a corpus file");
  corpus->fallthrough();
  corpus->require_subcommand(1);
  corpus->add_option("--input", cfg.input, "Corpus file")->required();
  corpus->add_option("--corpus-format", cfg.corpus_format, "tsv or jsonl (default: by extension)")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  corpus->add_option("--pattern", cfg.patterns, "Census pattern (repeatable)");
  corpus->add_flag("--upper-opens", cfg.upper_opens, "Letter brackets open with uppercase");
  add_format(corpus, cfg);
  auto* analyze_cmd = corpus->add_subcommand("analyze", "Per-pattern census on structures and shapes");
  auto* scatter_cmd = corpus->add_subcommand("scatter", "Size vs occurrences of 21 and 321");
  corpus->add_subcommand("brackets", "Records grouped by bracket types used");

  auto* verify = app.add_subcommand("verify", "Cross-check formula tables against brute force");
  verify->add_option("--max-n", cfg.max_n, "Largest matching size")->check(CLI::Range(1, 20));
  verify->add_option("--pattern", cfg.patterns, "Pattern (repeatable, default: all of size 2, 3)");
  verify->add_flag("--allow-large", cfg.allow_large, "Lift the brute-force size guard");
  add_format(verify, cfg);

  auto* sample = app.add_subcommand("sample", "Monte Carlo occurrence distribution");
  sample->add_option("--n", cfg.n, "Matching size")->required();
  sample->add_option("--samples", cfg.samples, "Number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  sample->add_option("--pattern", cfg.pattern, "Pattern (default 21)");
  add_format(sample, cfg);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("endhered");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  if (verify->parsed() && verify->count("--max-n") == 0) cfg.max_n = 7;

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (twist->parsed()) return cmd_twist(cfg, out);
    if (collapse->parsed()) return cmd_collapse(cfg, out, err);
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (sample->parsed()) return cmd_sample(cfg, out);
    if (corpus->parsed()) {
      const std::string action = analyze_cmd->parsed()   ? "analyze"
                                 : scatter_cmd->parsed() ? "scatter"
                                                         : "brackets";
      return cmd_corpus(cfg, action, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace endhered::cli
