#pragma once

#include <string>

#include "ccskg/query/eval.hpp"

namespace ccskg::query {

// SPARQL-results JSON document:
//   {"head":{"vars":[...]},
//    "results":{"bindings":[{"v":{"type":...,"value":...,...}}]}}
// Binding objects carry "type" ("uri" | "literal" | "bnode") and "value";
// typed literals add "datatype" (omitted for xsd:string) and language
// tagged ones "xml:lang". Unbound variables are absent from their binding
// object. Object keys are emitted in sorted order, so the document is
// byte-stable for a given solution sequence.
std::string to_sparql_results_json(const Solutions& solutions);

}  // namespace ccskg::query
