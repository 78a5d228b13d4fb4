#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/ingest/records.hpp"
#include "ccskg/ingest/warning_log.hpp"

namespace ccskg::ingest {

// Headered CSV: comma separated, double quotes with "" escapes, one record
// per line. Returns one name->value map per data row.
std::vector<std::map<std::string, std::string>> read_csv(std::string_view text);

// CORDEX domain table, one row per geodetic grid:
//   grid,domain,region,resolution
// The rotated-pole flag follows the grid-name convention: an 'i' suffix
// marks the interpolated (non-rotated) variant. Rows with a non-numeric
// resolution are rejected with a warning.
std::vector<CordexDomain> parse_cordex_domains(std::string_view csv, WarningLog& log);

// Climdex index table: id,definition,source_variable. `mip_names`, when
// given, flags indices whose source variable is not an ingested MIP
// variable.
std::vector<ClimdexIndex> parse_climdex(std::string_view csv,
                                        const std::set<std::string>* mip_names,
                                        WarningLog& log);

// Dataset manifest: id,variable,geodetic_resolution,time_resolution. The id
// is a DRS identifier for `project`; rows whose id does not parse are
// rejected with a warning.
std::vector<DatasetRecord> parse_dataset_manifest(std::string_view csv, Project project,
                                                  WarningLog& log);

}  // namespace ccskg::ingest
