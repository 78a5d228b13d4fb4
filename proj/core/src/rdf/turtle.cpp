#include "ccskg/rdf/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "scanner.hpp"

namespace ccskg::rdf {

namespace {

std::string term_token(const Term& t, const PrefixMap& prefixes) {
    switch (t.kind()) {
        case TermKind::Iri: {
            if (auto curie = prefixes.compact(t.value())) return *curie;
            return "<" + t.value() + ">";
        }
        case TermKind::BlankNode:
            return "_:" + t.value();
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(t.value()) + "\"";
            if (!t.language().empty()) {
                out += "@" + t.language();
            } else if (t.datatype() != iri::xsd_string) {
                if (auto curie = prefixes.compact(t.datatype())) {
                    out += "^^" + *curie;
                } else {
                    out += "^^<" + t.datatype() + ">";
                }
            }
            return out;
        }
    }
    return {};
}

std::string predicate_token(const Term& p, const PrefixMap& prefixes) {
    if (p.value() == iri::rdf_type) return "a";
    return term_token(p, prefixes);
}

// subject key -> predicate key -> sorted object tokens
using TripleBlock = std::map<std::string, std::map<std::string, std::vector<std::string>>>;

void emit_block(std::string& out, const TripleBlock& block, const std::string& indent) {
    for (const auto& [subject, po] : block) {
        out += indent + subject;
        bool first_predicate = true;
        for (const auto& [predicate, objects] : po) {
            if (!first_predicate) out += " ;";
            out += "\n" + indent + "    " + predicate + " ";
            for (std::size_t i = 0; i < objects.size(); ++i) {
                if (i > 0) out += " , ";
                out += objects[i];
            }
            first_predicate = false;
        }
        out += " .\n";
    }
}

TripleBlock group_triples(const std::vector<Triple>& triples, const PrefixMap& prefixes) {
    TripleBlock block;
    for (const Triple& t : triples) {
        block[term_token(t[0], prefixes)][predicate_token(t[1], prefixes)].push_back(
            term_token(t[2], prefixes));
    }
    for (auto& [subject, po] : block) {
        for (auto& [predicate, objects] : po) {
            std::sort(objects.begin(), objects.end());
            objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
        }
    }
    return block;
}

std::string prefix_header(const PrefixMap& prefixes) {
    std::string out;
    for (const auto& [prefix, ns] : prefixes.canonical_entries()) {
        out += "@prefix " + prefix + ": <" + ns + "> .\n";
    }
    return out;
}

}  // namespace

std::string to_turtle(const GraphStore& store) {
    std::string out = prefix_header(store.prefixes());
    std::map<std::string, std::vector<Triple>> per_graph;
    for (const Quad& q : store.quads()) {
        per_graph[q.graph().value()].push_back({q.subject(), q.predicate(), q.object()});
    }
    for (const auto& [graph_iri, triples] : per_graph) {
        out += "\nGRAPH <" + graph_iri + "> {\n";
        emit_block(out, group_triples(triples, store.prefixes()), "    ");
        out += "}\n";
    }
    return out;
}

std::string to_turtle_triples(const std::vector<Triple>& triples, const PrefixMap& prefixes) {
    std::string out = prefix_header(prefixes);
    out += "\n";
    emit_block(out, group_triples(triples, prefixes), "");
    return out;
}

std::string to_ntriples(const std::vector<Triple>& triples) {
    std::vector<std::string> lines;
    lines.reserve(triples.size());
    for (const Triple& t : triples) {
        lines.push_back(t[0].ntriples() + " " + t[1].ntriples() + " " + t[2].ntriples() + " .");
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

namespace {

class TurtleParser {
public:
    TurtleParser(std::string_view text, std::optional<Term> default_graph)
        : sc_(text), default_graph_(std::move(default_graph)) {}

    GraphStore run() {
        while (true) {
            sc_.skip_trivia();
            if (sc_.eof()) break;
            if (at_keyword("@prefix")) {
                read_prefix_decl(true);
            } else if (at_keyword("PREFIX")) {
                read_prefix_decl(false);
            } else if (at_keyword("GRAPH")) {
                read_graph_block();
            } else {
                if (!default_graph_) {
                    sc_.fail("triples outside a GRAPH block need a default graph");
                }
                read_triples(*default_graph_);
                expect('.');
            }
        }
        for (const auto& [prefix, ns] : prefixes_) store_.prefixes().add(prefix, ns);
        return std::move(store_);
    }

private:
    bool at_keyword(std::string_view kw) {
        for (std::size_t i = 0; i < kw.size(); ++i) {
            if (sc_.peek(i) != kw[i]) return false;
        }
        char after = sc_.peek(kw.size());
        return after == '\0' || std::isspace(static_cast<unsigned char>(after)) ||
               after == '<';
    }

    void consume_keyword(std::string_view kw) {
        for (std::size_t i = 0; i < kw.size(); ++i) sc_.advance();
    }

    void expect(char c) {
        sc_.skip_trivia();
        if (sc_.peek() != c) sc_.fail(std::string("expected '") + c + "'");
        sc_.advance();
    }

    void read_prefix_decl(bool turtle_style) {
        consume_keyword(turtle_style ? "@prefix" : "PREFIX");
        sc_.skip_trivia();
        std::string prefix;
        while (!sc_.eof() && sc_.peek() != ':') {
            char c = sc_.peek();
            if (std::isspace(static_cast<unsigned char>(c))) sc_.fail("malformed prefix name");
            prefix += sc_.advance();
        }
        expect(':');
        sc_.skip_trivia();
        std::string ns = sc_.read_iri_ref();
        if (turtle_style) expect('.');
        prefixes_[prefix] = ns;
    }

    void read_graph_block() {
        consume_keyword("GRAPH");
        sc_.skip_trivia();
        Term graph = read_term(true);
        if (!graph.is_iri()) sc_.fail("graph name must be an IRI");
        expect('{');
        while (true) {
            sc_.skip_trivia();
            if (sc_.peek() == '}') {
                sc_.advance();
                break;
            }
            if (sc_.eof()) sc_.fail("unterminated GRAPH block");
            read_triples(graph);
            sc_.skip_trivia();
            if (sc_.peek() == '.') sc_.advance();
        }
    }

    // subject predicate-object list, excluding the final '.' (caller eats it).
    void read_triples(const Term& graph) {
        sc_.skip_trivia();
        Term subject = read_term(false);
        while (true) {
            sc_.skip_trivia();
            Term predicate = read_predicate();
            while (true) {
                sc_.skip_trivia();
                Term object = read_term(false);
                try {
                    store_.insert(Quad(subject, predicate, object, graph));
                } catch (const ModelError& e) {
                    sc_.fail(e.what());
                }
                sc_.skip_trivia();
                if (sc_.peek() == ',') {
                    sc_.advance();
                    continue;
                }
                break;
            }
            sc_.skip_trivia();
            if (sc_.peek() == ';') {
                sc_.advance();
                sc_.skip_trivia();
                // A dangling ';' before '.' or '}' is tolerated.
                if (sc_.peek() == '.' || sc_.peek() == '}') break;
                continue;
            }
            break;
        }
    }

    Term read_predicate() {
        if (sc_.peek() == 'a') {
            char after = sc_.peek(1);
            if (std::isspace(static_cast<unsigned char>(after))) {
                sc_.advance();
                return Term::iri(std::string(iri::rdf_type));
            }
        }
        Term t = read_term(false);
        if (!t.is_iri()) sc_.fail("predicate must be an IRI");
        return t;
    }

    Term read_term(bool iri_only) {
        char c = sc_.peek();
        if (c == '<') {
            return Term::iri(sc_.read_iri_ref());
        }
        if (!iri_only && c == '_') {
            return Term::blank(sc_.read_blank_label());
        }
        if (!iri_only && c == '"') {
            std::string lexical = sc_.read_quoted_string();
            if (sc_.peek() == '^' && sc_.peek(1) == '^') {
                sc_.advance();
                sc_.advance();
                Term dt = read_term(false);
                if (!dt.is_iri()) sc_.fail("literal datatype must be an IRI");
                return Term::literal(std::move(lexical), dt.value());
            }
            if (sc_.peek() == '@') {
                sc_.advance();
                std::string tag;
                while (!sc_.eof()) {
                    char t = sc_.peek();
                    if (std::isalnum(static_cast<unsigned char>(t)) || t == '-') {
                        tag += sc_.advance();
                    } else {
                        break;
                    }
                }
                if (tag.empty()) sc_.fail("empty language tag");
                return Term::lang_literal(std::move(lexical), std::move(tag));
            }
            return Term::literal(std::move(lexical));
        }
        // Prefixed name.
        std::string prefix;
        while (!sc_.eof() && sc_.peek() != ':') {
            char p = sc_.peek();
            if (!std::isalnum(static_cast<unsigned char>(p)) && p != '_' && p != '-') {
                sc_.fail("expected a term");
            }
            prefix += sc_.advance();
        }
        if (sc_.peek() != ':') sc_.fail("expected ':' in prefixed name");
        sc_.advance();
        std::string local = sc_.read_pname_local();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) sc_.fail("unknown prefix: " + prefix);
        return Term::iri(it->second + local);
    }

    detail::Scanner sc_;
    std::optional<Term> default_graph_;
    std::map<std::string, std::string> prefixes_;
    GraphStore store_;
};

}  // namespace

GraphStore parse_turtle(std::string_view text, const std::optional<Term>& default_graph) {
    return TurtleParser(text, default_graph).run();
}

std::vector<Triple> parse_turtle_triples(std::string_view text) {
    // Reuse the store-based parser with a scratch graph.
    Term scratch = Term::iri("tag:ccskg:scratch");
    GraphStore store = TurtleParser(text, scratch).run();
    std::vector<Triple> out;
    out.reserve(store.size());
    for (const Quad& q : store.quads()) {
        out.push_back({q.subject(), q.predicate(), q.object()});
    }
    return out;
}

}  // namespace ccskg::rdf
