#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ccskg/rdf/prefix_map.hpp"
#include "ccskg/rdf/quad.hpp"

namespace ccskg::rdf {

// An (s, p, o) triple as seen through the union default graph.
using Triple = std::array<Term, 3>;

// In-memory quad store with set semantics and named-graph provenance.
//
// Matching with the graph position left open runs against the union of all
// named graphs. match() reports quads (one per graph); triples() and
// match_triples() report the union as a triple set, deduplicated across
// graphs, which is the view the query engine evaluates over.
//
// Concurrency contract: any number of concurrent readers OR a single
// writer. The store is a plain value type; take a copy (or publish a
// shared_ptr<const GraphStore>) to hand a snapshot to another thread.
class GraphStore {
public:
    // Returns true if the quad was new. Duplicate inserts are no-ops.
    bool insert(Quad quad);

    std::size_t size() const { return quads_.size(); }
    bool empty() const { return quads_.empty(); }

    bool contains(const Quad& quad) const;
    // True if the term occurs in subject or object position of any quad.
    bool mentions(const Term& term) const;

    // All quads agreeing with every concrete position. An empty optional is
    // a wildcard; omitting `graph` matches across all named graphs.
    std::vector<Quad> match(const std::optional<Term>& subject,
                            const std::optional<Term>& predicate,
                            const std::optional<Term>& object,
                            const std::optional<Term>& graph = std::nullopt) const;

    // Union-view matching: distinct (s, p, o) triples, first-seen order.
    std::vector<Triple> match_triples(const std::optional<Term>& subject,
                                      const std::optional<Term>& predicate,
                                      const std::optional<Term>& object) const;

    // Distinct triples of the union view, first-seen order.
    const std::vector<Triple>& triples() const { return distinct_triples_; }

    const std::vector<Quad>& quads() const { return quads_; }

    // Graph names present in the store, sorted by IRI.
    std::vector<Term> graphs() const;
    std::size_t count_in_graph(const Term& graph) const;

    // Exact equality: identical quad sets (blank labels included).
    bool operator==(const GraphStore& other) const;

    PrefixMap& prefixes() { return prefixes_; }
    const PrefixMap& prefixes() const { return prefixes_; }

private:
    std::vector<Quad> quads_;
    std::vector<Triple> distinct_triples_;
    std::unordered_set<std::string> quad_keys_;
    std::unordered_set<std::string> triple_keys_;
    std::unordered_set<std::string> node_keys_;  // subject/object occurrences
    std::unordered_map<std::string, std::vector<std::size_t>> by_graph_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_subject_predicate_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_predicate_object_;
    PrefixMap prefixes_;
};

}  // namespace ccskg::rdf
