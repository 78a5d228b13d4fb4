#pragma once

#include "ccskg/rdf/graph_store.hpp"

namespace ccskg::rdf {

// True iff some blank-node bijection makes the quad sets equal, graph by
// graph. Ground quads (no blank nodes) must match exactly. Brute-force
// bijection search with signature pruning; throws UndecidableError when
// either side has more than `max_blank_nodes` blank nodes.
bool isomorphic(const GraphStore& a, const GraphStore& b, std::size_t max_blank_nodes = 20);

}  // namespace ccskg::rdf
