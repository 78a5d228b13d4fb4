#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/ingest/records.hpp"
#include "ccskg/ingest/warning_log.hpp"

namespace ccskg::ingest {

// Parses a CMOR table: a JSON object whose "variable_entry" member maps
// MIP short names to {standard_name, cell_methods, modeling_realm,
// positive}. `cf_names`, when given, is the set of ingested CF standard
// names; entries whose standard name is absent or unlisted are flagged
// unresolved (with a warning) but kept. Document order is preserved.
std::vector<MipVariable> parse_cmor_table(std::string_view json,
                                          const std::set<std::string>* cf_names,
                                          WarningLog& log);

}  // namespace ccskg::ingest
