#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/rdf/graph_store.hpp"

namespace ccskg::rdf {

// Turtle-style output, extended with `GRAPH <iri> { ... }` blocks so a
// multi-graph store survives the round trip. The emitted subset: @prefix
// declarations, prefixed names, `a`, `;`/`,` groups, typed and
// language-tagged literals. Deterministic: graphs, subjects, predicates
// and objects are each sorted canonically.
std::string to_turtle(const GraphStore& store);

// Plain Turtle document for a triple list (no graph blocks), e.g. a
// dereference response.
std::string to_turtle_triples(const std::vector<Triple>& triples, const PrefixMap& prefixes);

// One N-Triples statement per triple, sorted.
std::string to_ntriples(const std::vector<Triple>& triples);

// Parses the subset emitted above. Statements outside a GRAPH block go to
// `default_graph`; if none is given, such statements are an error.
GraphStore parse_turtle(std::string_view text,
                        const std::optional<Term>& default_graph = std::nullopt);

// Parses a plain triple document (same subset, GRAPH blocks rejected)
// into a triple list, for round-tripping dereference responses.
std::vector<Triple> parse_turtle_triples(std::string_view text);

}  // namespace ccskg::rdf
