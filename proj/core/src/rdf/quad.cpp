#include "ccskg/rdf/quad.hpp"

#include "ccskg/error.hpp"

namespace ccskg::rdf {

Quad::Quad(Term subject, Term predicate, Term object, Term graph)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)),
      graph_(std::move(graph)) {
    if (subject_.is_literal()) {
        throw ModelError("quad subject must be an IRI or blank node, got literal: " +
                         subject_.ntriples());
    }
    if (!predicate_.is_iri()) {
        throw ModelError("quad predicate must be an IRI, got: " + predicate_.ntriples());
    }
    if (!graph_.is_iri()) {
        throw ModelError("quad graph must be an IRI, got: " + graph_.ntriples());
    }
}

std::string Quad::line() const {
    return subject_.ntriples() + " " + predicate_.ntriples() + " " + object_.ntriples() +
           " " + graph_.ntriples() + " .";
}

std::string Quad::triple_key() const {
    return subject_.ntriples() + " " + predicate_.ntriples() + " " + object_.ntriples();
}

}  // namespace ccskg::rdf
