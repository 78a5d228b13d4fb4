#pragma once

#include <string_view>

#include "ccskg/error.hpp"
#include "ccskg/ingest/records.hpp"

namespace ccskg::ingest {

class DrsError : public Error {
public:
    using Error::Error;
};

// Parses a dot-separated dataset identifier into its facets.
//
// cmip5 profiles:
//   short: cmip5.<model>.<experiment>.<ensemble>
//   long:  cmip5.<product>.<institute>.<model>.<experiment>.<frequency>.
//          <realm>.<mip-table>.<ensemble>[.<version>]
// cordex profile:
//   cordex.<product>.<domain>.<institute>.<driving-model>.<experiment>.
//   <driving-ensemble>.<model>.<frequency>[.<version>]
//
// The ensemble facet must match r<digits>i<digits>p<digits> with positive
// indices; versions (a trailing v<digits> facet) are captured but not
// modelled. Throws DrsError with the offending facet in the message.
DrsComponents parse_drs_id(std::string_view text, Project project);

// r10i1p1 -> {10, 1, 1}; throws DrsError on grammar violations.
EnsembleMember parse_ensemble(std::string_view text);

}  // namespace ccskg::ingest
