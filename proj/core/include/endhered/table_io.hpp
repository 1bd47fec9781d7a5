#pragma once

#include <ostream>
#include <string>

#include "endhered/enumeration.hpp"

namespace endhered {

/// Rows k = 0..max_k, columns n = 1..max_n, right-aligned.
void write_table_text(std::ostream& os, const DistributionTable& table);
/// Header "n,k,count"; counts as decimal strings.
void write_table_csv(std::ostream& os, const DistributionTable& table);
/// {"pattern": "...", "max_n": N, "entries": [[n, k, "count"], ...]}
void write_table_json(std::ostream& os, const DistributionTable& table);

}  // namespace endhered
