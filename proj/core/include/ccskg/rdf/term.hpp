#pragma once

#include <string>
#include <string_view>

namespace ccskg::rdf {

// Well-known datatype and vocabulary IRIs.
namespace iri {
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view xsd_duration = "http://www.w3.org/2001/XMLSchema#duration";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view rdf_type =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
}  // namespace iri

enum class TermKind { Iri, BlankNode, Literal };

// An RDF term. Equality is structural: lexical form plus datatype plus
// language tag. A literal without an explicit datatype is an xsd:string;
// a language-tagged literal always has datatype rdf:langString.
class Term {
public:
    // Factories validate their input and throw ModelError on violation.
    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical);
    static Term literal(std::string lexical, std::string datatype_iri);
    static Term lang_literal(std::string lexical, std::string language_tag);

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_blank() const { return kind_ == TermKind::BlankNode; }
    bool is_literal() const { return kind_ == TermKind::Literal; }

    // IRI string, blank-node label, or literal lexical form.
    const std::string& value() const { return value_; }
    // Datatype IRI; empty for non-literals.
    const std::string& datatype() const { return datatype_; }
    // Language tag; empty unless a langString literal.
    const std::string& language() const { return language_; }

    // N-Triples token form; also the canonical sort and index key.
    std::string ntriples() const;

    bool operator==(const Term&) const = default;
    // Codepoint order on the token form.
    bool operator<(const Term& other) const { return ntriples() < other.ntriples(); }

private:
    Term(TermKind kind, std::string value, std::string datatype, std::string language)
        : kind_(kind),
          value_(std::move(value)),
          datatype_(std::move(datatype)),
          language_(std::move(language)) {}

    TermKind kind_;
    std::string value_;
    std::string datatype_;
    std::string language_;
};

// True iff `s` starts with a URI scheme followed by ':'.
bool has_iri_scheme(std::string_view s);

// Escapes a literal lexical form for N-Triples/N-Quads/Turtle output.
std::string escape_literal(std::string_view s);

}  // namespace ccskg::rdf
