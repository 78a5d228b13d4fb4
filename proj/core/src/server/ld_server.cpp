#include "ccskg/server/ld_server.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>
#include <thread>

#include <httplib.h>

#include "ccskg/error.hpp"
#include "ccskg/query/eval.hpp"
#include "ccskg/query/parser.hpp"
#include "ccskg/query/results_json.hpp"
#include "ccskg/rdf/turtle.hpp"
#include "ccskg/vocab/iri_minter.hpp"

namespace ccskg::server {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

struct AcceptEntry {
    std::string type;
    double q = 1.0;
};

std::vector<AcceptEntry> parse_accept(std::string_view header) {
    std::vector<AcceptEntry> out;
    std::size_t start = 0;
    while (start <= header.size()) {
        auto end = header.find(',', start);
        std::string_view item =
            header.substr(start, end == std::string_view::npos ? header.size() - start
                                                               : end - start);
        start = end == std::string_view::npos ? header.size() + 1 : end + 1;
        if (trim(item).empty()) continue;
        AcceptEntry entry;
        std::size_t semi = item.find(';');
        entry.type = trim(item.substr(0, semi));
        std::transform(entry.type.begin(), entry.type.end(), entry.type.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        while (semi != std::string_view::npos) {
            auto next = item.find(';', semi + 1);
            std::string param = trim(item.substr(
                semi + 1, next == std::string_view::npos ? item.size() - semi - 1
                                                         : next - semi - 1));
            if (param.rfind("q=", 0) == 0) {
                try {
                    entry.q = std::stod(param.substr(2));
                } catch (...) {
                    entry.q = 0.0;
                }
            }
            semi = next;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

bool accept_matches(const std::string& pattern, std::string_view type) {
    if (pattern == "*/*") return true;
    auto slash = pattern.find('/');
    if (slash != std::string::npos && pattern.substr(slash + 1) == "*") {
        return type.substr(0, slash) == pattern.substr(0, slash) && type.size() > slash &&
               type[slash] == '/';
    }
    return pattern == type;
}

std::string html_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Re-encodes a url-decoded request path the way the minter encodes minted
// IRIs, slashes preserved.
std::string re_encode_path(std::string_view path) {
    std::string out;
    for (char c : path) {
        if (c == '/') {
            out += c;
        } else {
            out += vocab::IriMinter::encode_value(std::string_view(&c, 1));
        }
    }
    return out;
}

}  // namespace

std::optional<std::string> choose_media_type(std::string_view accept_header,
                                             const std::vector<std::string>& supported) {
    std::string header = trim(accept_header);
    if (header.empty()) return supported.front();

    auto entries = parse_accept(header);
    if (entries.empty()) return supported.front();

    double best_q = 0.0;
    std::optional<std::string> best;
    for (const std::string& candidate : supported) {
        double q = -1.0;
        for (const AcceptEntry& entry : entries) {
            if (accept_matches(entry.type, candidate)) q = std::max(q, entry.q);
        }
        if (q > best_q) {  // ties keep the earlier (server-preferred) entry
            best_q = q;
            best = candidate;
        }
    }
    if (!best || best_q <= 0.0) return std::nullopt;
    return best;
}

std::vector<rdf::Triple> describe(const rdf::GraphStore& store, const rdf::Term& iri) {
    std::vector<rdf::Triple> out;
    std::set<std::string> seen;
    auto add = [&](const std::vector<rdf::Quad>& quads) {
        for (const rdf::Quad& q : quads) {
            if (seen.insert(q.triple_key()).second) {
                out.push_back({q.subject(), q.predicate(), q.object()});
            }
        }
    };
    add(store.match(iri, std::nullopt, std::nullopt));
    add(store.match(std::nullopt, std::nullopt, iri));
    std::sort(out.begin(), out.end(), [](const rdf::Triple& a, const rdf::Triple& b) {
        return a[0].ntriples() + a[1].ntriples() + a[2].ntriples() <
               b[0].ntriples() + b[1].ntriples() + b[2].ntriples();
    });
    return out;
}

std::string render_html(const rdf::Term& iri, const std::vector<rdf::Triple>& triples,
                        const vocab::Vocabulary& vocab) {
    auto display = [&](const rdf::Term& t) -> std::string {
        if (t.is_iri()) {
            if (auto curie = vocab.compact(t.value())) return html_escape(*curie);
            return html_escape(t.value());
        }
        if (t.is_blank()) return html_escape("_:" + t.value());
        std::string text = "\"" + t.value() + "\"";
        if (!t.language().empty()) text += "@" + t.language();
        return html_escape(text);
    };

    std::string title = display(iri);
    std::string out = "<!DOCTYPE html>\n<html>\n<head><meta charset=\"utf-8\"><title>" +
                      title + "</title></head>\n<body>\n";
    out += "<h1>" + title + "</h1>\n";
    out += "<p><code>" + html_escape(iri.value()) + "</code></p>\n";
    out += "<table border=\"1\">\n<tr><th>term</th><th>property</th><th>value</th></tr>\n";
    for (const rdf::Triple& t : triples) {
        out += "<tr><td>" + display(t[0]) + "</td><td>" + display(t[1]) + "</td><td>" +
               display(t[2]) + "</td></tr>\n";
    }
    out += "</table>\n</body>\n</html>\n";
    return out;
}

struct LdServer::Impl {
    ServerConfig config;
    std::shared_ptr<const rdf::GraphStore> store;
    std::shared_ptr<const vocab::Vocabulary> vocab;
    httplib::Server http;
    std::thread worker;
    std::atomic<int> bound_port{0};

    Impl(ServerConfig cfg, std::shared_ptr<const rdf::GraphStore> s,
         std::shared_ptr<const vocab::Vocabulary> v)
        : config(std::move(cfg)), store(std::move(s)), vocab(std::move(v)) {
        route();
    }

    void route() {
        http.Get("/sparql", [this](const httplib::Request& req, httplib::Response& res) {
            if (!req.has_param("query")) {
                res.status = 400;
                res.set_content("missing 'query' parameter", "text/plain");
                return;
            }
            answer_sparql(req.get_param_value("query"), res);
        });
        http.Post("/sparql", [this](const httplib::Request& req, httplib::Response& res) {
            std::string text;
            if (req.has_param("query")) {
                text = req.get_param_value("query");
            } else {
                text = req.body;
            }
            if (trim(text).empty()) {
                res.status = 400;
                res.set_content("missing query", "text/plain");
                return;
            }
            answer_sparql(text, res);
        });
        // Anything else on /sparql is not allowed.
        for (auto method : {"PUT", "DELETE", "PATCH"}) {
            (void)method;
        }
        http.Put("/sparql", [](const httplib::Request&, httplib::Response& res) {
            res.status = 405;
            res.set_content("method not allowed", "text/plain");
        });
        http.Delete("/sparql", [](const httplib::Request&, httplib::Response& res) {
            res.status = 405;
            res.set_content("method not allowed", "text/plain");
        });

        http.Get(R"(/(data|onto)/.*)", [this](const httplib::Request& req,
                                              httplib::Response& res) {
            dereference(req, res);
        });
    }

    void answer_sparql(const std::string& text, httplib::Response& res) {
        try {
            query::Query parsed = query::parse_query(text, vocab->prefixes());
            auto* select = std::get_if<query::SelectQuery>(&parsed);
            if (!select) {
                res.status = 400;
                res.set_content("updates are not supported on this endpoint", "text/plain");
                return;
            }
            query::Solutions solutions = query::evaluate(*store, *select);
            res.set_content(query::to_sparql_results_json(solutions),
                            std::string(kSparqlResultsType));
        } catch (const ParseError& e) {
            res.status = 400;
            res.set_content(e.what(), "text/plain");
        } catch (const Error& e) {
            res.status = 400;
            res.set_content(e.what(), "text/plain");
        }
    }

    void dereference(const httplib::Request& req, httplib::Response& res) {
        const std::vector<std::string> supported = {std::string(kTurtleType),
                                                    std::string(kNTriplesType),
                                                    std::string(kHtmlType)};
        auto media = choose_media_type(req.get_header_value("Accept"), supported);
        if (!media) {
            res.status = 406;
            res.set_content("no acceptable representation; offered: text/turtle, "
                            "application/n-triples, text/html",
                            "text/plain");
            return;
        }
        std::string iri_text = config.base_iri + re_encode_path(req.path.substr(1));
        rdf::Term iri = rdf::Term::iri(iri_text);
        if (!store->mentions(iri)) {
            res.status = 404;
            res.set_content("no such resource: " + iri_text, "text/plain");
            return;
        }
        auto triples = describe(*store, iri);
        if (*media == kTurtleType) {
            res.set_content(rdf::to_turtle_triples(triples, vocab->prefixes()),
                            std::string(kTurtleType));
        } else if (*media == kNTriplesType) {
            res.set_content(rdf::to_ntriples(triples), std::string(kNTriplesType));
        } else {
            res.set_content(render_html(iri, triples, *vocab), std::string(kHtmlType));
        }
    }
};

LdServer::LdServer(ServerConfig config, std::shared_ptr<const rdf::GraphStore> store,
                   std::shared_ptr<const vocab::Vocabulary> vocab)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(store), std::move(vocab))) {}

LdServer::~LdServer() { stop(); }

bool LdServer::start() {
    int port = impl_->config.port;
    if (port == 0) {
        port = impl_->http.bind_to_any_port(impl_->config.host);
        if (port < 0) return false;
    } else if (!impl_->http.bind_to_port(impl_->config.host, port)) {
        return false;
    }
    impl_->bound_port = port;
    impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
    impl_->http.wait_until_ready();
    return true;
}

void LdServer::stop() {
    if (impl_ && impl_->http.is_running()) impl_->http.stop();
    if (impl_ && impl_->worker.joinable()) impl_->worker.join();
}

int LdServer::port() const { return impl_->bound_port; }

bool LdServer::listen() {
    impl_->bound_port = impl_->config.port;
    return impl_->http.listen(impl_->config.host, impl_->config.port);
}

}  // namespace ccskg::server
