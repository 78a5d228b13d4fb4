#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/error.hpp"
#include "ccskg/ingest/records.hpp"
#include "ccskg/ingest/warning_log.hpp"
#include "ccskg/rdf/quad.hpp"
#include "ccskg/vocab/vocabulary.hpp"

namespace ccskg::mapping {

class RuleError : public Error {
public:
    using Error::Error;
};

// An IRI template: literal path pieces with {field} placeholders. Relative
// templates are rooted at the instance namespace; absolute ones are written
// as <...>. Field values are percent-encoded on expansion.
struct IriTemplate {
    struct Piece {
        bool is_field;
        std::string text;  // literal text or field name
    };
    std::vector<Piece> pieces;
    bool absolute = false;

    std::vector<std::string> field_names() const;
};

struct ObjectSpec {
    enum class Kind { FieldLiteral, FieldIri, Constant };
    Kind kind = Kind::FieldLiteral;
    std::string field;         // FieldLiteral
    std::string datatype_iri;  // FieldLiteral; empty = xsd:string
    std::string language;      // FieldLiteral alternative to datatype
    IriTemplate iri_template;  // FieldIri
    std::optional<rdf::Term> constant;
};

struct PredicateObjectMap {
    std::string predicate_iri;
    ObjectSpec object;
};

// One record-kind -> quads template.
struct MappingRule {
    std::string id;
    std::string record_kind;
    IriTemplate subject;
    std::vector<std::string> type_iris;
    std::vector<PredicateObjectMap> po_maps;
    std::string graph_name;
};

struct RuleSet {
    std::vector<MappingRule> rules;
};

// Compiles a rule document. All templates are parsed and all curies
// resolved up front; any problem fails the whole document with the rule
// named in the message.
//
// Document grammar (line oriented, '#' comments):
//   rule <id>
//   from <record-kind>
//   graph <graph-name>
//   subject <template>
//   type <curie> [<curie> ...]
//   po <predicate-curie> literal {field} [^^<datatype-curie> | @<lang>]
//   po <predicate-curie> iri <template>
//   po <predicate-curie> const <curie or <iri> or "text">
//   end
RuleSet compile_rules(std::string_view text, const vocab::Vocabulary& vocab);

// Applies every matching rule to every record. Absent optional fields make
// their po map emit nothing; a subject template with a missing field (or
// one expanding to a relative IRI) skips the record with a warning. The
// result is a quad set: deduplicated and canonically sorted, so it is
// independent of record order.
std::vector<rdf::Quad> apply(const RuleSet& rules, std::span<const ingest::Record> records,
                             const vocab::Vocabulary& vocab, ingest::WarningLog& log);

}  // namespace ccskg::mapping
