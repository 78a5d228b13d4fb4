#include "ccskg/query/results_json.hpp"

#include <nlohmann/json.hpp>

namespace ccskg::query {

std::string to_sparql_results_json(const Solutions& solutions) {
    nlohmann::json doc;
    doc["head"]["vars"] = solutions.vars;
    nlohmann::json bindings = nlohmann::json::array();
    for (const Binding& row : solutions.rows) {
        nlohmann::json entry = nlohmann::json::object();
        for (const auto& [name, term] : row) {
            nlohmann::json value;
            switch (term.kind()) {
                case rdf::TermKind::Iri:
                    value["type"] = "uri";
                    value["value"] = term.value();
                    break;
                case rdf::TermKind::BlankNode:
                    value["type"] = "bnode";
                    value["value"] = term.value();
                    break;
                case rdf::TermKind::Literal:
                    value["type"] = "literal";
                    value["value"] = term.value();
                    if (!term.language().empty()) {
                        value["xml:lang"] = term.language();
                    } else if (term.datatype() != rdf::iri::xsd_string) {
                        value["datatype"] = term.datatype();
                    }
                    break;
            }
            entry[name] = std::move(value);
        }
        bindings.push_back(std::move(entry));
    }
    doc["results"]["bindings"] = std::move(bindings);
    return doc.dump();
}

}  // namespace ccskg::query
