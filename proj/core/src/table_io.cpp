#include "endhered/table_io.hpp"

#include <algorithm>
#include <iomanip>

#include <json.hpp>

namespace endhered {

void write_table_text(std::ostream& os, const DistributionTable& table) {
  const std::size_t max_k = table.max_k();
  std::size_t width = std::to_string(table.max_n()).size();
  for (std::size_t n = 1; n <= table.max_n(); ++n) {
    for (std::size_t k = 0; k <= max_k; ++k) width = std::max(width, table.at(n, k).str().size());
  }
  const std::size_t label = std::max<std::size_t>(3, std::to_string(max_k).size());
  os << "pattern " << table.pattern() << '\n';
  os << std::setw(static_cast<int>(label)) << "k\\n" << " |";
  for (std::size_t n = 1; n <= table.max_n(); ++n) os << ' ' << std::setw(static_cast<int>(width)) << n;
  os << '\n' << std::string(label + 1, '-') << '+'
     << std::string(table.max_n() * (width + 1), '-') << '\n';
  for (std::size_t k = 0; k <= max_k; ++k) {
    os << std::setw(static_cast<int>(label)) << k << " |";
    for (std::size_t n = 1; n <= table.max_n(); ++n) {
      os << ' ' << std::setw(static_cast<int>(width)) << table.at(n, k).str();
    }
    os << '\n';
  }
}

void write_table_csv(std::ostream& os, const DistributionTable& table) {
  os << "n,k,count\n";
  for (std::size_t n = 1; n <= table.max_n(); ++n) {
    for (std::size_t k = 0; k < table.row_width(n); ++k) {
      os << n << ',' << k << ',' << table.at(n, k).str() << '\n';
    }
  }
}

void write_table_json(std::ostream& os, const DistributionTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t n = 1; n <= table.max_n(); ++n) {
    for (std::size_t k = 0; k < table.row_width(n); ++k) {
      entries.push_back({n, k, table.at(n, k).str()});
    }
  }
  const nlohmann::json doc = {
      {"pattern", table.pattern()}, {"max_n", table.max_n()}, {"entries", entries}};
  os << doc.dump() << '\n';
}

}  // namespace endhered
