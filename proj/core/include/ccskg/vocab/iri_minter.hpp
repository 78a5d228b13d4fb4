#pragma once

#include <string>
#include <string_view>

#include "ccskg/rdf/term.hpp"

namespace ccskg::vocab {

// Deterministic IRI minting for knowledge-graph individuals. All instance
// IRIs live under <base>data/cs/; ontology terms under <base>onto/. Field
// values are percent-encoded (unreserved characters kept), so minting is
// injective per entity kind.
class IriMinter {
public:
    explicit IriMinter(std::string base_iri);

    const std::string& base() const { return base_; }
    std::string data_root() const { return base_ + "data/cs/"; }
    std::string onto_root(std::string_view module) const {
        return base_ + "onto/" + std::string(module) + "/";
    }

    rdf::Term cf_variable(std::string_view standard_name) const;
    rdf::Term mip_variable(std::string_view short_name) const;
    rdf::Term climdex_index(std::string_view index_id) const;
    rdf::Term model(std::string_view model_id) const;
    rdf::Term institution(std::string_view institution_id) const;
    // `key` is the project-profile simulation key, e.g.
    // "cmip5.HadCM3.rcp45.r10i1p1".
    rdf::Term simulation(std::string_view key) const;
    rdf::Term scenario(std::string_view name) const;
    rdf::Term grid(std::string_view grid_id) const;
    rdf::Term region(std::string_view region_name) const;
    rdf::Term dimension(std::string_view name) const;
    // Outputs and datasets hang off their parent: <parent>/<suffix>.
    rdf::Term dataset(const rdf::Term& parent, std::string_view suffix) const;
    rdf::Term graph(std::string_view graph_name) const;

    // Expands an instance template such as "variable/mip/{name}": literal
    // path characters pass through, '{field}' placeholders were already
    // substituted by the caller; this percent-encodes one value segment.
    static std::string encode_value(std::string_view value);

    rdf::Term instance(std::string_view relative_path_with_encoded_values) const;

private:
    std::string base_;
};

}  // namespace ccskg::vocab
