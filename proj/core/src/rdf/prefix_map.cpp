#include "ccskg/rdf/prefix_map.hpp"

#include <algorithm>
#include <cctype>

#include "ccskg/error.hpp"

namespace ccskg::rdf {

void PrefixMap::add(std::string prefix, std::string namespace_iri) {
    if (!has_iri_scheme(namespace_iri)) {
        throw VocabError("prefix namespace is not an absolute IRI: " + namespace_iri);
    }
    ns_to_prefix_.emplace(namespace_iri, prefix);  // keeps the first registration
    prefix_to_ns_[std::move(prefix)] = std::move(namespace_iri);
}

bool PrefixMap::has(std::string_view prefix) const {
    return prefix_to_ns_.find(prefix) != prefix_to_ns_.end();
}

std::optional<std::string> PrefixMap::namespace_of(std::string_view prefix) const {
    auto it = prefix_to_ns_.find(prefix);
    if (it == prefix_to_ns_.end()) return std::nullopt;
    return it->second;
}

std::string PrefixMap::expand(std::string_view curie) const {
    auto colon = curie.find(':');
    if (colon == std::string_view::npos) {
        throw VocabError("not a curie (missing ':'): " + std::string(curie));
    }
    auto prefix = curie.substr(0, colon);
    auto it = prefix_to_ns_.find(prefix);
    if (it == prefix_to_ns_.end()) {
        throw VocabError("unknown prefix: " + std::string(prefix));
    }
    return it->second + std::string(curie.substr(colon + 1));
}

bool PrefixMap::safe_local_part(std::string_view local) {
    if (local.empty()) return false;
    if (local.front() == '.' || local.back() == '.') return false;
    for (char c : local) {
        if (std::isalnum(static_cast<unsigned char>(c))) continue;
        if (c == '_' || c == '-' || c == '.') continue;
        return false;
    }
    return true;
}

std::optional<std::string> PrefixMap::compact(std::string_view iri) const {
    const std::string* best_ns = nullptr;
    const std::string* best_prefix = nullptr;
    for (const auto& [ns, prefix] : ns_to_prefix_) {
        if (iri.size() > ns.size() && iri.substr(0, ns.size()) == ns) {
            if (!best_ns || ns.size() > best_ns->size()) {
                best_ns = &ns;
                best_prefix = &prefix;
            }
        }
    }
    if (!best_ns) return std::nullopt;
    std::string_view local = iri.substr(best_ns->size());
    if (!safe_local_part(local)) return std::nullopt;
    return *best_prefix + ":" + std::string(local);
}

std::vector<std::pair<std::string, std::string>> PrefixMap::canonical_entries() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [ns, prefix] : ns_to_prefix_) {
        out.emplace_back(prefix, ns);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ccskg::rdf
