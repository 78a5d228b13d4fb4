#include "ccskg/query/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "../rdf/scanner.hpp"
#include "ccskg/error.hpp"

namespace ccskg::query {

namespace {

using rdf::Term;
using rdf::detail::Scanner;

class Parser {
public:
    Parser(std::string_view text, const rdf::PrefixMap& base_prefixes)
        : sc_(text), prefixes_(base_prefixes) {}

    Query run() {
        read_prologue();
        std::string keyword = peek_word();
        if (keyword == "SELECT") return read_select();
        if (keyword == "INSERT") return read_insert();
        sc_.fail("expected SELECT or INSERT");
    }

private:
    // --- lexical helpers -------------------------------------------------

    static bool word_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    // Next bare word, uppercased, without consuming.
    std::string peek_word() {
        sc_.skip_trivia();
        std::string out;
        std::size_t i = 0;
        while (word_char(sc_.peek(i))) out += sc_.peek(i++);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        return out;
    }

    bool at_keyword(std::string_view kw) { return peek_word() == kw; }

    void consume_keyword(std::string_view kw) {
        if (!at_keyword(kw)) sc_.fail("expected " + std::string(kw));
        for (std::size_t i = 0; i < kw.size(); ++i) sc_.advance();
    }

    void expect(char c) {
        sc_.skip_trivia();
        if (sc_.peek() != c) sc_.fail(std::string("expected '") + c + "'");
        sc_.advance();
    }

    // --- prologue ---------------------------------------------------------

    void read_prologue() {
        while (true) {
            sc_.skip_trivia();
            if (at_keyword("PREFIX")) {
                consume_keyword("PREFIX");
                sc_.skip_trivia();
                std::string prefix;
                while (!sc_.eof() && sc_.peek() != ':') {
                    char c = sc_.peek();
                    if (std::isspace(static_cast<unsigned char>(c))) {
                        sc_.fail("malformed prefix declaration");
                    }
                    prefix += sc_.advance();
                }
                expect(':');
                sc_.skip_trivia();
                overrides_[prefix] = sc_.read_iri_ref();
            } else {
                break;
            }
        }
    }

    std::string expand(const std::string& prefix, const std::string& local) {
        auto it = overrides_.find(prefix);
        if (it != overrides_.end()) return it->second + local;
        auto ns = prefixes_.namespace_of(prefix);
        if (!ns) sc_.fail("unknown prefix: " + prefix);
        return *ns + local;
    }

    // --- terms ------------------------------------------------------------

    Variable read_variable() {
        expect('?');
        std::string name;
        while (word_char(sc_.peek())) name += sc_.advance();
        if (name.empty()) sc_.fail("empty variable name");
        return Variable{name};
    }

    Term read_iri_term() {
        sc_.skip_trivia();
        if (sc_.peek() == '<') {
            return Term::iri(sc_.read_iri_ref());
        }
        std::string prefix;
        while (!sc_.eof() && sc_.peek() != ':') {
            char c = sc_.peek();
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
                sc_.fail("expected an IRI or prefixed name");
            }
            prefix += sc_.advance();
        }
        if (sc_.peek() != ':') sc_.fail("expected ':' in prefixed name");
        sc_.advance();
        std::string local = sc_.read_pname_local();
        return Term::iri(expand(prefix, local));
    }

    Term read_literal() {
        std::string lexical = sc_.read_quoted_string();
        if (sc_.peek() == '^' && sc_.peek(1) == '^') {
            sc_.advance();
            sc_.advance();
            Term dt = read_iri_term();
            return Term::literal(std::move(lexical), dt.value());
        }
        if (sc_.peek() == '@') {
            sc_.advance();
            std::string tag;
            while (!sc_.eof() &&
                   (std::isalnum(static_cast<unsigned char>(sc_.peek())) || sc_.peek() == '-')) {
                tag += sc_.advance();
            }
            if (tag.empty()) sc_.fail("empty language tag");
            return Term::lang_literal(std::move(lexical), std::move(tag));
        }
        return Term::literal(std::move(lexical));
    }

    Term read_numeric() {
        std::string text;
        if (sc_.peek() == '-' || sc_.peek() == '+') text += sc_.advance();
        bool dot = false;
        while (!sc_.eof()) {
            char c = sc_.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                text += sc_.advance();
            } else if (c == '.' && !dot &&
                       std::isdigit(static_cast<unsigned char>(sc_.peek(1)))) {
                dot = true;
                text += sc_.advance();
            } else {
                break;
            }
        }
        if (text.empty() || !std::isdigit(static_cast<unsigned char>(text.back()))) {
            sc_.fail("malformed numeric literal");
        }
        return Term::literal(text, std::string(dot ? rdf::iri::xsd_decimal
                                                   : rdf::iri::xsd_integer));
    }

    Node read_node() {
        sc_.skip_trivia();
        char c = sc_.peek();
        if (c == '?') return read_variable();
        if (c == '"') return read_literal();
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            return read_numeric();
        }
        if (c == '_' && sc_.peek(1) == ':') {
            return Term::blank(sc_.read_blank_label());
        }
        return read_iri_term();
    }

    // --- paths ------------------------------------------------------------

    PathStep read_path_step() {
        PathStep step;
        sc_.skip_trivia();
        if (sc_.peek() == '^') {
            sc_.advance();
            step.inverse = true;
            sc_.skip_trivia();
        }
        if (sc_.peek() == 'a' && !word_char(sc_.peek(1))) {
            sc_.advance();
            step.predicate = Term::iri(std::string(rdf::iri::rdf_type));
        } else {
            step.predicate = read_iri_term();
        }
        if (sc_.peek() == '*') {
            sc_.advance();
            step.zero_or_more = true;
        }
        return step;
    }

    Path read_path() {
        Path path;
        path.steps.push_back(read_path_step());
        while (true) {
            sc_.skip_trivia();
            if (sc_.peek() == '/') {
                sc_.advance();
                path.steps.push_back(read_path_step());
            } else {
                break;
            }
        }
        return path;
    }

    // --- group graph pattern ----------------------------------------------

    void read_group(WhereClause& where) {
        expect('{');
        while (true) {
            sc_.skip_trivia();
            if (sc_.peek() == '}') {
                sc_.advance();
                return;
            }
            if (sc_.eof()) sc_.fail("unterminated group pattern");
            if (at_keyword("FILTER")) {
                consume_keyword("FILTER");
                where.filters.push_back(read_filter());
                sc_.skip_trivia();
                if (sc_.peek() == '.') sc_.advance();
                continue;
            }
            read_triples_block(where);
        }
    }

    void read_triples_block(WhereClause& where) {
        Node subject = read_node();
        while (true) {
            Path path = read_path();
            while (true) {
                Node object = read_node();
                where.patterns.push_back({subject, path, object});
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
                if (sc_.peek() == '.' || sc_.peek() == '}') break;
                continue;
            }
            break;
        }
        sc_.skip_trivia();
        if (sc_.peek() == '.') sc_.advance();
    }

    Filter read_filter() {
        expect('(');
        Operand lhs = read_operand();
        sc_.skip_trivia();
        CompareOp op = read_compare_op();
        Operand rhs = read_operand();
        expect(')');
        return Filter{op, std::move(lhs), std::move(rhs)};
    }

    Operand read_operand() {
        sc_.skip_trivia();
        char c = sc_.peek();
        if (c == '?') return read_variable();
        if (c == '"') return read_literal();
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            return read_numeric();
        }
        if (c == '(') {
            sc_.advance();
            Operand inner = read_operand();
            expect(')');
            return inner;
        }
        return read_iri_term();
    }

    CompareOp read_compare_op() {
        char c = sc_.peek();
        if (c == '<') {
            sc_.advance();
            if (sc_.peek() == '=') {
                sc_.advance();
                return CompareOp::LessEqual;
            }
            return CompareOp::Less;
        }
        if (c == '>') {
            sc_.advance();
            if (sc_.peek() == '=') {
                sc_.advance();
                return CompareOp::GreaterEqual;
            }
            return CompareOp::Greater;
        }
        if (c == '=') {
            sc_.advance();
            return CompareOp::Equal;
        }
        if (c == '!' && sc_.peek(1) == '=') {
            sc_.advance();
            sc_.advance();
            return CompareOp::NotEqual;
        }
        sc_.fail("expected a comparison operator");
    }

    // --- query forms --------------------------------------------------------

    Query read_select() {
        consume_keyword("SELECT");
        SelectQuery query;
        sc_.skip_trivia();
        if (at_keyword("DISTINCT")) {
            consume_keyword("DISTINCT");
            query.distinct = true;
        }
        sc_.skip_trivia();
        if (sc_.peek() == '*') {
            sc_.advance();
        } else {
            while (true) {
                sc_.skip_trivia();
                if (sc_.peek() != '?') break;
                query.projection.push_back(read_variable());
            }
            if (query.projection.empty()) sc_.fail("SELECT needs '*' or variables");
        }
        sc_.skip_trivia();
        if (at_keyword("WHERE")) consume_keyword("WHERE");
        read_group(query.where);

        sc_.skip_trivia();
        if (at_keyword("ORDER")) {
            consume_keyword("ORDER");
            sc_.skip_trivia();
            consume_keyword("BY");
            while (true) {
                sc_.skip_trivia();
                if (sc_.peek() != '?') break;
                query.order_by.push_back(read_variable());
            }
            if (query.order_by.empty()) sc_.fail("ORDER BY needs variables");
        }
        sc_.skip_trivia();
        if (at_keyword("LIMIT")) {
            consume_keyword("LIMIT");
            sc_.skip_trivia();
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(sc_.peek()))) digits += sc_.advance();
            if (digits.empty()) sc_.fail("LIMIT needs a number");
            query.limit = std::stoul(digits);
        }
        sc_.skip_trivia();
        if (!sc_.eof()) sc_.fail("unexpected content after query");

        note_unbound_projection(query);
        return query;
    }

    Query read_insert() {
        consume_keyword("INSERT");
        InsertQuery query;
        expect('{');
        while (true) {
            sc_.skip_trivia();
            if (sc_.peek() == '}') {
                sc_.advance();
                break;
            }
            if (sc_.eof()) sc_.fail("unterminated INSERT template");
            read_template_block(query.templates);
        }
        sc_.skip_trivia();
        consume_keyword("WHERE");
        read_group(query.where);
        sc_.skip_trivia();
        if (!sc_.eof()) sc_.fail("unexpected content after query");
        return query;
    }

    void read_template_block(std::vector<TripleTemplate>& templates) {
        Node subject = read_node();
        while (true) {
            sc_.skip_trivia();
            Node predicate;
            if (sc_.peek() == 'a' && !word_char(sc_.peek(1))) {
                sc_.advance();
                predicate = Term::iri(std::string(rdf::iri::rdf_type));
            } else if (sc_.peek() == '?') {
                predicate = read_variable();
            } else {
                predicate = read_iri_term();
            }
            while (true) {
                Node object = read_node();
                templates.push_back({subject, predicate, object});
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
                if (sc_.peek() == '.' || sc_.peek() == '}') break;
                continue;
            }
            break;
        }
        sc_.skip_trivia();
        if (sc_.peek() == '.') sc_.advance();
    }

    void note_unbound_projection(SelectQuery& query) {
        std::set<std::string> bound;
        for (const auto& pattern : query.where.patterns) {
            if (auto* v = std::get_if<Variable>(&pattern.subject)) bound.insert(v->name);
            if (auto* v = std::get_if<Variable>(&pattern.object)) bound.insert(v->name);
        }
        for (const auto& var : query.projection) {
            if (!bound.count(var.name)) {
                query.warnings.push_back("projected variable ?" + var.name +
                                         " is never bound in WHERE (unbounded projection)");
            }
        }
    }

    Scanner sc_;
    const rdf::PrefixMap& prefixes_;
    std::map<std::string, std::string> overrides_;
};

}  // namespace

Query parse_query(std::string_view text, const rdf::PrefixMap& base_prefixes) {
    return Parser(text, base_prefixes).run();
}

}  // namespace ccskg::query
