#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/rdf/graph_store.hpp"
#include "ccskg/vocab/vocabulary.hpp"

namespace ccskg::server {

struct ServerConfig {
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 = pick any free port
    std::string base_iri;
};

// Media types offered for dereference responses, preference order.
inline constexpr std::string_view kTurtleType = "text/turtle";
inline constexpr std::string_view kNTriplesType = "application/n-triples";
inline constexpr std::string_view kHtmlType = "text/html";
inline constexpr std::string_view kSparqlResultsType = "application/sparql-results+json";

// Picks the supported media type with the highest q-value from an Accept
// header; an absent or empty header (or a bare */*) yields the first
// supported entry. Nullopt means 406.
std::optional<std::string> choose_media_type(std::string_view accept_header,
                                             const std::vector<std::string>& supported);

// Concise description of a resource: every triple it occurs in as subject
// or object, union view, deduplicated and sorted.
std::vector<rdf::Triple> describe(const rdf::GraphStore& store, const rdf::Term& iri);

// Server-rendered resource page: a table of (direction, property, value)
// rows with curie labels.
std::string render_html(const rdf::Term& iri, const std::vector<rdf::Triple>& triples,
                        const vocab::Vocabulary& vocab);

// HTTP service over an immutable store snapshot: /sparql (GET and POST)
// plus linked-data dereferencing with content negotiation for /data/... and
// /onto/... paths. Read-only; the store is never mutated.
class LdServer {
public:
    LdServer(ServerConfig config, std::shared_ptr<const rdf::GraphStore> store,
             std::shared_ptr<const vocab::Vocabulary> vocab);
    ~LdServer();

    LdServer(const LdServer&) = delete;
    LdServer& operator=(const LdServer&) = delete;

    // Binds and serves on a background thread; returns false when the
    // address cannot be bound. port() reports the actual port.
    bool start();
    void stop();
    int port() const;

    // Blocking variant for the CLI.
    bool listen();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace ccskg::server
