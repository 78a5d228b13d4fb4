#include "ccskg/rdf/nquads.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "scanner.hpp"

namespace ccskg::rdf {

std::string to_nquads(const GraphStore& store) {
    std::vector<std::array<std::string, 4>> rows;
    rows.reserve(store.size());
    for (const Quad& q : store.quads()) {
        rows.push_back({q.graph().ntriples(), q.subject().ntriples(),
                        q.predicate().ntriples(), q.object().ntriples()});
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& r : rows) {
        out += r[1];
        out += ' ';
        out += r[2];
        out += ' ';
        out += r[3];
        out += ' ';
        out += r[0];
        out += " .\n";
    }
    return out;
}

namespace {

Term read_term(detail::Scanner& sc) {
    char c = sc.peek();
    if (c == '<') {
        return Term::iri(sc.read_iri_ref());
    }
    if (c == '_') {
        return Term::blank(sc.read_blank_label());
    }
    if (c == '"') {
        std::string lexical = sc.read_quoted_string();
        if (sc.peek() == '^' && sc.peek(1) == '^') {
            sc.advance();
            sc.advance();
            if (sc.peek() != '<') sc.fail("expected '<' after '^^'");
            return Term::literal(std::move(lexical), sc.read_iri_ref());
        }
        if (sc.peek() == '@') {
            sc.advance();
            std::string tag;
            while (!sc.eof()) {
                char t = sc.peek();
                if (std::isalnum(static_cast<unsigned char>(t)) || t == '-') {
                    tag += sc.advance();
                } else {
                    break;
                }
            }
            if (tag.empty()) sc.fail("empty language tag");
            return Term::lang_literal(std::move(lexical), std::move(tag));
        }
        return Term::literal(std::move(lexical));
    }
    sc.fail("expected IRI, blank node, or literal");
}

}  // namespace

GraphStore parse_nquads(std::string_view text) {
    GraphStore store;
    detail::Scanner sc(text);
    while (true) {
        sc.skip_trivia();
        if (sc.eof()) break;
        Term subject = read_term(sc);
        sc.skip_inline_space();
        Term predicate = read_term(sc);
        sc.skip_inline_space();
        Term object = read_term(sc);
        sc.skip_inline_space();
        Term graph = read_term(sc);
        sc.skip_inline_space();
        if (sc.peek() != '.') sc.fail("expected '.' at end of statement");
        sc.advance();
        try {
            store.insert(Quad(std::move(subject), std::move(predicate), std::move(object),
                              std::move(graph)));
        } catch (const ModelError& e) {
            sc.fail(e.what());
        }
    }
    return store;
}

}  // namespace ccskg::rdf
