#pragma once

#include <string>
#include <string_view>

#include "ccskg/rdf/graph_store.hpp"

namespace ccskg::rdf {

// Canonical N-Quads document: one statement per line, sorted by graph,
// subject, predicate, object on the token forms (codepoint order). Two
// stores holding the same quads serialize to byte-identical documents.
std::string to_nquads(const GraphStore& store);

// Parses an N-Quads document. Throws ParseError with line/column on bad
// syntax. Blank lines and '#' comments are accepted.
GraphStore parse_nquads(std::string_view text);

}  // namespace ccskg::rdf
