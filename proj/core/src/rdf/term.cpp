#include "ccskg/rdf/term.hpp"

#include <cctype>

#include "ccskg/error.hpp"

namespace ccskg::rdf {

namespace {

bool valid_blank_label(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

bool valid_language_tag(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') return false;
    }
    return true;
}

void check_iri_body(std::string_view s) {
    for (char c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u <= 0x20) throw ModelError("IRI contains whitespace or control character: " + std::string(s));
        switch (c) {
            case '<':
            case '>':
            case '"':
            case '{':
            case '}':
            case '|':
            case '^':
            case '`':
            case '\\':
                throw ModelError(std::string("IRI contains forbidden character '") + c + "': " + std::string(s));
            default:
                break;
        }
    }
}

}  // namespace

bool has_iri_scheme(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
            return false;
        }
    }
    return false;
}

Term Term::iri(std::string value) {
    if (!has_iri_scheme(value)) {
        throw ModelError("not an absolute IRI (missing scheme): " + value);
    }
    check_iri_body(value);
    return Term(TermKind::Iri, std::move(value), "", "");
}

Term Term::blank(std::string label) {
    if (!valid_blank_label(label)) {
        throw ModelError("invalid blank node label: " + label);
    }
    return Term(TermKind::BlankNode, std::move(label), "", "");
}

Term Term::literal(std::string lexical) {
    return Term(TermKind::Literal, std::move(lexical), std::string(iri::xsd_string), "");
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
    if (datatype_iri.empty()) return literal(std::move(lexical));
    if (!has_iri_scheme(datatype_iri)) {
        throw ModelError("literal datatype is not an absolute IRI: " + datatype_iri);
    }
    if (datatype_iri == iri::rdf_lang_string) {
        throw ModelError("rdf:langString literal requires a language tag");
    }
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype_iri), "");
}

Term Term::lang_literal(std::string lexical, std::string language_tag) {
    if (!valid_language_tag(language_tag)) {
        throw ModelError("invalid language tag: " + language_tag);
    }
    return Term(TermKind::Literal, std::move(lexical), std::string(iri::rdf_lang_string),
                std::move(language_tag));
}

std::string escape_literal(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: {
                unsigned char u = static_cast<unsigned char>(c);
                if (u < 0x20) {
                    static const char* hex = "0123456789ABCDEF";
                    out += "\\u00";
                    out += hex[(u >> 4) & 0xF];
                    out += hex[u & 0xF];
                } else {
                    out += c;
                }
            }
        }
    }
    return out;
}

std::string Term::ntriples() const {
    switch (kind_) {
        case TermKind::Iri:
            return "<" + value_ + ">";
        case TermKind::BlankNode:
            return "_:" + value_;
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(value_) + "\"";
            if (!language_.empty()) {
                out += "@" + language_;
            } else if (datatype_ != iri::xsd_string) {
                out += "^^<" + datatype_ + ">";
            }
            return out;
        }
    }
    return {};
}

}  // namespace ccskg::rdf
