#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ccskg/error.hpp"

namespace ccskg::rdf::detail {

// Character-level scanner with line/column tracking, shared by the N-Quads,
// Turtle and query parsers.
class Scanner {
public:
    explicit Scanner(std::string_view input) : input_(input) {}

    bool eof() const { return pos_ >= input_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < input_.size() ? input_[pos_ + ahead] : '\0';
    }

    char advance() {
        char c = input_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    // Skips whitespace and '#' comments.
    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    // Skips spaces and tabs only (stays on the current line).
    void skip_inline_space() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }
    std::size_t offset() const { return pos_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    // <...> IRI reference; returns the IRI body with \u escapes decoded.
    std::string read_iri_ref();

    // "..." literal body with escapes decoded; assumes the opening quote is next.
    std::string read_quoted_string();

    // _:label blank node; assumes '_' is next.
    std::string read_blank_label();

    // Prefixed-name word: letters, digits and [_.-] with no trailing dots,
    // stopping before whitespace or punctuation that cannot continue it.
    std::string read_pname_local();

private:
    void append_codepoint(std::string& out, unsigned long cp);
    unsigned long read_hex(std::size_t digits);

    std::string_view input_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace ccskg::rdf::detail
