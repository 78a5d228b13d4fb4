#pragma once

#include <span>
#include <vector>

#include "ccskg/ingest/records.hpp"
#include "ccskg/ingest/warning_log.hpp"
#include "ccskg/rdf/quad.hpp"
#include "ccskg/vocab/vocabulary.hpp"

namespace ccskg::mapping {

// Builds the simulation / output / dataset aggregation from dataset rows.
// This needs grouping across records, which the flat rule format cannot
// express, so it is a built-in mapper.
//
// Emitted per row (set semantics collapse repeats across rows):
//   - one simulation node per distinct simulation key, typed
//     GlobalClimateSimulation (cmip5) or DynamicalDownscaling (cordex),
//     linked to its model and, for scenario experiments, its scenario
//     individual; cordex simulations also link to the driving simulation.
//   - one output node per distinct output label, a Dataset reached via
//     hasOutput.
//   - one dataset node per row under its output via hasPart, offering its
//     MIP variable and carrying per-axis variable nodes with
//     discretizations: the time axis points at a shared duration grid, the
//     geodetic axis at the named domain grid (cordex) or a shared
//     resolution grid (cmip5).
//
// Unknown experiment facets drop only the scenario edge, with a warning.
std::vector<rdf::Quad> map_drs(std::span<const ingest::DatasetRecord> records,
                               const vocab::Vocabulary& vocab, const std::string& graph_name,
                               ingest::WarningLog& log);

}  // namespace ccskg::mapping
