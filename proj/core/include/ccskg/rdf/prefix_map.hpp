#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/rdf/term.hpp"

namespace ccskg::rdf {

// Bidirectional prefix <-> namespace table. Several prefixes may name the
// same namespace (aliases); the first registered one is canonical and is
// the one compact() produces.
class PrefixMap {
public:
    void add(std::string prefix, std::string namespace_iri);

    bool has(std::string_view prefix) const;
    std::optional<std::string> namespace_of(std::string_view prefix) const;

    // "pfx:local" -> absolute IRI. Throws VocabError on unknown prefix or if
    // the input has no colon.
    std::string expand(std::string_view curie) const;

    // Longest-namespace match; returns the canonical curie, or nullopt when
    // the IRI lies outside every registered namespace or the local part is
    // not safe to print as a prefixed name.
    std::optional<std::string> compact(std::string_view iri) const;

    // (prefix, namespace) pairs, canonical entries only, sorted by prefix.
    std::vector<std::pair<std::string, std::string>> canonical_entries() const;

    // True for local parts this map is willing to print in prefixed form.
    static bool safe_local_part(std::string_view local);

private:
    std::map<std::string, std::string, std::less<>> prefix_to_ns_;
    // namespace -> canonical prefix, first registration wins
    std::map<std::string, std::string> ns_to_prefix_;
};

}  // namespace ccskg::rdf
