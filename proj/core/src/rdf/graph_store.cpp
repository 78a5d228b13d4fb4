#include "ccskg/rdf/graph_store.hpp"

#include <algorithm>

namespace ccskg::rdf {

namespace {

bool agrees(const Quad& q, const std::optional<Term>& s, const std::optional<Term>& p,
            const std::optional<Term>& o, const std::optional<Term>& g) {
    if (s && q.subject() != *s) return false;
    if (p && q.predicate() != *p) return false;
    if (o && q.object() != *o) return false;
    if (g && q.graph() != *g) return false;
    return true;
}

}  // namespace

bool GraphStore::insert(Quad quad) {
    std::string key = quad.key();
    if (!quad_keys_.insert(key).second) return false;

    std::size_t idx = quads_.size();
    by_graph_[quad.graph().ntriples()].push_back(idx);
    by_subject_predicate_[quad.subject().ntriples() + " " + quad.predicate().ntriples()]
        .push_back(idx);
    by_predicate_object_[quad.predicate().ntriples() + " " + quad.object().ntriples()]
        .push_back(idx);

    if (triple_keys_.insert(quad.triple_key()).second) {
        distinct_triples_.push_back({quad.subject(), quad.predicate(), quad.object()});
    }
    node_keys_.insert(quad.subject().ntriples());
    node_keys_.insert(quad.object().ntriples());

    quads_.push_back(std::move(quad));
    return true;
}

bool GraphStore::contains(const Quad& quad) const {
    return quad_keys_.count(quad.key()) > 0;
}

bool GraphStore::mentions(const Term& term) const {
    return node_keys_.count(term.ntriples()) > 0;
}

std::vector<Quad> GraphStore::match(const std::optional<Term>& subject,
                                    const std::optional<Term>& predicate,
                                    const std::optional<Term>& object,
                                    const std::optional<Term>& graph) const {
    // Pick the most selective available index, then verify all positions.
    const std::vector<std::size_t>* candidates = nullptr;
    if (subject && predicate) {
        auto it = by_subject_predicate_.find(subject->ntriples() + " " + predicate->ntriples());
        if (it == by_subject_predicate_.end()) return {};
        candidates = &it->second;
    } else if (predicate && object) {
        auto it = by_predicate_object_.find(predicate->ntriples() + " " + object->ntriples());
        if (it == by_predicate_object_.end()) return {};
        candidates = &it->second;
    } else if (graph) {
        auto it = by_graph_.find(graph->ntriples());
        if (it == by_graph_.end()) return {};
        candidates = &it->second;
    }

    std::vector<Quad> out;
    if (candidates) {
        for (std::size_t idx : *candidates) {
            if (agrees(quads_[idx], subject, predicate, object, graph)) {
                out.push_back(quads_[idx]);
            }
        }
    } else {
        for (const Quad& q : quads_) {
            if (agrees(q, subject, predicate, object, graph)) out.push_back(q);
        }
    }
    return out;
}

std::vector<Triple> GraphStore::match_triples(const std::optional<Term>& subject,
                                              const std::optional<Term>& predicate,
                                              const std::optional<Term>& object) const {
    std::vector<Triple> out;
    for (const Triple& t : distinct_triples_) {
        if (subject && t[0] != *subject) continue;
        if (predicate && t[1] != *predicate) continue;
        if (object && t[2] != *object) continue;
        out.push_back(t);
    }
    return out;
}

std::vector<Term> GraphStore::graphs() const {
    std::vector<Term> out;
    for (const auto& [key, idxs] : by_graph_) {
        if (!idxs.empty()) out.push_back(quads_[idxs.front()].graph());
    }
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.value() < b.value(); });
    return out;
}

std::size_t GraphStore::count_in_graph(const Term& graph) const {
    auto it = by_graph_.find(graph.ntriples());
    return it == by_graph_.end() ? 0 : it->second.size();
}

bool GraphStore::operator==(const GraphStore& other) const {
    return quad_keys_ == other.quad_keys_;
}

}  // namespace ccskg::rdf
