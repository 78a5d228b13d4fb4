#pragma once

#include <string_view>
#include <vector>

#include "ccskg/ingest/records.hpp"
#include "ccskg/ingest/warning_log.hpp"

namespace ccskg::ingest {

// Parses a CF standard-name table: an XML document whose <entry id="...">
// elements carry <canonical_units> and <description> children. <alias>
// elements are not variables and are skipped silently. Entries without an
// id are skipped with a warning; document order is preserved. Malformed
// XML throws ParseError.
std::vector<CfVariable> parse_cf_table(std::string_view xml, WarningLog& log);

}  // namespace ccskg::ingest
