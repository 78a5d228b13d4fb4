#include "scanner.hpp"

#include <cctype>

namespace ccskg::rdf::detail {

unsigned long Scanner::read_hex(std::size_t digits) {
    unsigned long value = 0;
    for (std::size_t i = 0; i < digits; ++i) {
        if (eof()) fail("unterminated escape sequence");
        char c = advance();
        value <<= 4;
        if (c >= '0' && c <= '9') {
            value |= static_cast<unsigned long>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            value |= static_cast<unsigned long>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            value |= static_cast<unsigned long>(c - 'A' + 10);
        } else {
            fail(std::string("invalid hex digit '") + c + "' in escape sequence");
        }
    }
    return value;
}

void Scanner::append_codepoint(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
        out += static_cast<char>(cp);
    } else if (cp <= 0x7FF) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0xFFFF) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0x10FFFF) {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        fail("escape sequence is not a Unicode codepoint");
    }
}

std::string Scanner::read_iri_ref() {
    if (peek() != '<') fail("expected '<'");
    advance();
    std::string out;
    while (true) {
        if (eof()) fail("unterminated IRI reference");
        char c = advance();
        if (c == '>') break;
        if (c == '\\') {
            if (eof()) fail("unterminated escape in IRI");
            char e = advance();
            if (e == 'u') {
                append_codepoint(out, read_hex(4));
            } else if (e == 'U') {
                append_codepoint(out, read_hex(8));
            } else {
                fail(std::string("invalid escape '\\") + e + "' in IRI");
            }
        } else if (static_cast<unsigned char>(c) <= 0x20) {
            fail("whitespace or control character inside IRI reference");
        } else {
            out += c;
        }
    }
    return out;
}

std::string Scanner::read_quoted_string() {
    if (peek() != '"') fail("expected '\"'");
    advance();
    std::string out;
    while (true) {
        if (eof()) fail("unterminated string literal");
        char c = advance();
        if (c == '"') break;
        if (c == '\n') fail("newline inside string literal");
        if (c == '\\') {
            if (eof()) fail("unterminated escape in string literal");
            char e = advance();
            switch (e) {
                case 't': out += '\t'; break;
                case 'b': out += '\b'; break;
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case 'f': out += '\f'; break;
                case '"': out += '"'; break;
                case '\'': out += '\''; break;
                case '\\': out += '\\'; break;
                case 'u': append_codepoint(out, read_hex(4)); break;
                case 'U': append_codepoint(out, read_hex(8)); break;
                default: fail(std::string("invalid escape '\\") + e + "' in string literal");
            }
        } else {
            out += c;
        }
    }
    return out;
}

std::string Scanner::read_blank_label() {
    if (peek() != '_' || peek(1) != ':') fail("expected blank node '_:'");
    advance();
    advance();
    std::string out;
    while (!eof()) {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            out += advance();
        } else {
            break;
        }
    }
    if (out.empty()) fail("empty blank node label");
    return out;
}

std::string Scanner::read_pname_local() {
    std::string out;
    while (!eof()) {
        char c = peek();
        bool continues = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
        if (!continues && c == '.') {
            // A dot continues the name only when followed by another name
            // character; otherwise it terminates the statement.
            char next = peek(1);
            continues = std::isalnum(static_cast<unsigned char>(next)) || next == '_' ||
                        next == '-' || next == '.';
        }
        if (!continues) break;
        out += advance();
    }
    return out;
}

}  // namespace ccskg::rdf::detail
