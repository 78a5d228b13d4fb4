#pragma once

#include <string_view>
#include <vector>

#include "ccskg/ingest/records.hpp"
#include "ccskg/ingest/warning_log.hpp"

namespace ccskg::ingest {

struct CvContent {
    std::vector<InstitutionRecord> institutions;
    std::vector<ModelRecord> models;
};

// Parses a controlled-vocabulary JSON document with "institution_id"
// (id -> full name) and "source_id" (id -> {institution_id: [..],
// label: ..}) members. A model naming an unlisted institution is kept,
// with the dangling reference logged.
CvContent parse_cmip_cv(std::string_view json, WarningLog& log);

}  // namespace ccskg::ingest
