#pragma once

#include <string>

#include "ccskg/rdf/term.hpp"

namespace ccskg::rdf {

// A triple with its named graph. The constructor enforces the RDF shape:
// subject is an IRI or blank node, predicate is an IRI, graph is an IRI.
class Quad {
public:
    Quad(Term subject, Term predicate, Term object, Term graph);

    const Term& subject() const { return subject_; }
    const Term& predicate() const { return predicate_; }
    const Term& object() const { return object_; }
    const Term& graph() const { return graph_; }

    // One N-Quads statement, without the trailing newline.
    std::string line() const;

    // Key for set membership: the N-Quads statement itself.
    std::string key() const { return line(); }
    // Triple-level key, ignoring the graph.
    std::string triple_key() const;

    bool operator==(const Quad&) const = default;

private:
    Term subject_;
    Term predicate_;
    Term object_;
    Term graph_;
};

}  // namespace ccskg::rdf
