#include "ccskg/rdf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccskg/error.hpp"

namespace ccskg::rdf {

namespace {

std::vector<std::string> blank_labels(const GraphStore& store) {
    std::set<std::string> labels;
    for (const Quad& q : store.quads()) {
        if (q.subject().is_blank()) labels.insert(q.subject().value());
        if (q.object().is_blank()) labels.insert(q.object().value());
    }
    return {labels.begin(), labels.end()};
}

// Quad key with blank labels replaced through `mapping`; unmapped blanks
// keep a marker so partially mapped quads never collide with ground ones.
std::string mapped_key(const Quad& q, const std::map<std::string, std::string>& mapping) {
    auto token = [&](const Term& t) {
        if (!t.is_blank()) return t.ntriples();
        auto it = mapping.find(t.value());
        return it != mapping.end() ? "_:" + it->second : "_:?" + t.value();
    };
    return token(q.subject()) + " " + token(q.predicate()) + " " + token(q.object()) + " " +
           q.graph().ntriples();
}

// Position-insensitive signature of a blank node: the multiset of quads it
// occurs in, with every blank replaced by a placeholder. Nodes can only map
// to nodes with the same signature.
std::string blank_signature(const GraphStore& store, const std::string& label) {
    std::vector<std::string> parts;
    for (const Quad& q : store.quads()) {
        bool in_subject = q.subject().is_blank() && q.subject().value() == label;
        bool in_object = q.object().is_blank() && q.object().value() == label;
        if (!in_subject && !in_object) continue;
        auto token = [&](const Term& t, bool here) {
            if (t.is_blank()) return std::string(here ? "_:*" : "_:_");
            return t.ntriples();
        };
        parts.push_back(token(q.subject(), in_subject) + " " + q.predicate().ntriples() +
                        " " + token(q.object(), in_object) + " " + q.graph().ntriples());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) {
        out += p;
        out += '\n';
    }
    return out;
}

bool extend(const GraphStore& a, const GraphStore& b,
            const std::vector<std::string>& a_blanks,
            const std::map<std::string, std::vector<std::string>>& candidates,
            std::map<std::string, std::string>& mapping, std::set<std::string>& used,
            std::size_t next) {
    if (next == a_blanks.size()) {
        std::set<std::string> keys_a;
        for (const Quad& q : a.quads()) keys_a.insert(mapped_key(q, mapping));
        std::set<std::string> keys_b;
        static const std::map<std::string, std::string> identity;
        for (const Quad& q : b.quads()) keys_b.insert(mapped_key(q, identity));
        return keys_a == keys_b;
    }
    const std::string& label = a_blanks[next];
    for (const std::string& target : candidates.at(label)) {
        if (used.count(target)) continue;
        mapping[label] = target;
        used.insert(target);
        if (extend(a, b, a_blanks, candidates, mapping, used, next + 1)) return true;
        used.erase(target);
        mapping.erase(label);
    }
    return false;
}

}  // namespace

bool isomorphic(const GraphStore& a, const GraphStore& b, std::size_t max_blank_nodes) {
    if (a.size() != b.size()) return false;

    std::vector<std::string> a_blanks = blank_labels(a);
    std::vector<std::string> b_blanks = blank_labels(b);
    if (a_blanks.size() != b_blanks.size()) return false;
    if (a_blanks.size() > max_blank_nodes) {
        throw UndecidableError("isomorphism undecidable at this size: " +
                               std::to_string(a_blanks.size()) + " blank nodes exceeds limit of " +
                               std::to_string(max_blank_nodes));
    }

    // Ground quads must agree exactly.
    std::set<std::string> ground_a, ground_b;
    for (const Quad& q : a.quads()) {
        if (!q.subject().is_blank() && !q.object().is_blank()) ground_a.insert(q.key());
    }
    for (const Quad& q : b.quads()) {
        if (!q.subject().is_blank() && !q.object().is_blank()) ground_b.insert(q.key());
    }
    if (ground_a != ground_b) return false;
    if (a_blanks.empty()) return true;

    std::map<std::string, std::vector<std::string>> candidates;
    std::map<std::string, std::string> sig_b;
    for (const auto& label : b_blanks) sig_b[label] = blank_signature(b, label);
    for (const auto& label : a_blanks) {
        std::string sig = blank_signature(a, label);
        for (const auto& [target, target_sig] : sig_b) {
            if (sig == target_sig) candidates[label].push_back(target);
        }
        if (candidates[label].empty()) return false;
    }

    std::map<std::string, std::string> mapping;
    std::set<std::string> used;
    return extend(a, b, a_blanks, candidates, mapping, used, 0);
}

}  // namespace ccskg::rdf
