#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccskg/ingest/warning_log.hpp"
#include "ccskg/query/ast.hpp"
#include "ccskg/rdf/graph_store.hpp"

namespace ccskg::query {

using Binding = std::map<std::string, rdf::Term>;

struct Solutions {
    // Projected variable names, in projection order ('*' = first appearance).
    std::vector<std::string> vars;
    // One map per solution; unbound variables are simply absent.
    std::vector<Binding> rows;
};

// Evaluates a SELECT query over the union default graph (the store's
// distinct-triple view).
//
// Semantics: basic graph pattern join in textual order with binding
// propagation (bag semantics); '*' paths are reflexive-transitive closures,
// so a node reaches itself by a length-0 path; filters apply to the whole
// group and drop solutions that compare false or do not compare at all;
// ORDER BY uses the total order unbound < blank < IRI < literal (numerics
// by value, strings by codepoint, others by lexical form) with a
// deterministic whole-row tie-break; DISTINCT de-duplicates after
// projection; LIMIT truncates. Evaluation is read-only and deterministic.
Solutions evaluate(const rdf::GraphStore& store, const SelectQuery& query);

// Evaluates the WHERE clause, instantiates the template for every solution
// and inserts the quads into `target_graph` (set semantics). Solutions that
// leave a template variable unbound are skipped with a warning. Returns the
// number of quads actually inserted.
std::size_t evaluate_insert(rdf::GraphStore& store, const InsertQuery& query,
                            const rdf::Term& target_graph,
                            ingest::WarningLog* log = nullptr);

// Reflexive-transitive closure of `predicate` edges from `start` (BFS over
// the union view; `start` is always included). Exposed for path tests.
std::vector<rdf::Term> reachable_zero_or_more(const rdf::GraphStore& store,
                                              const rdf::Term& start,
                                              const rdf::Term& predicate,
                                              bool inverse = false);

}  // namespace ccskg::query
