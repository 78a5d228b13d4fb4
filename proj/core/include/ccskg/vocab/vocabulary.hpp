#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/rdf/prefix_map.hpp"
#include "ccskg/rdf/quad.hpp"
#include "ccskg/vocab/iri_minter.hpp"

namespace ccskg::vocab {

enum class TermRole { Class, ObjectProperty, DatatypeProperty };

struct VocabTerm {
    std::string curie;
    std::string iri;
    TermRole role;
    std::string label;
    // Direct superclass / superproperty, as a curie.
    std::optional<std::string> super;
    // External terms (rdf:, rdfs:, owl:, xsd:) resolve through the registry
    // but are not emitted into the ontology graph.
    bool external = false;
};

// What an experiment facet means for the scenario edge.
struct ScenarioInfo {
    std::string name;         // individual local name, e.g. "RCP4.5"
    std::string class_curie;  // "ccso:RCP" or "ccso:SSP"
    std::string label;
};

// A built-in dimensional-space individual (geodetic space, time).
struct DimensionInfo {
    std::string name;         // local name under dimension/
    std::string class_curie;  // most specific class, e.g. "data:Continuum"
    std::string label;
};

// The single registry of every ontology term the toolchain emits or
// queries, with deterministic instance-IRI minting. Immutable after
// construction; freely shared across threads.
class Vocabulary {
public:
    // The standard registry rooted at `base_iri` (which also roots all
    // minted instance IRIs).
    explicit Vocabulary(std::string base_iri);

    const IriMinter& minter() const { return minter_; }
    const rdf::PrefixMap& prefixes() const { return prefixes_; }

    // Curie -> registered term IRI. Unknown prefixes throw VocabError;
    // curies in an owned namespace must name a registered term.
    rdf::Term expand(std::string_view curie) const;
    std::optional<std::string> compact(std::string_view iri) const;

    const VocabTerm* find_by_iri(std::string_view iri) const;
    const VocabTerm* find_by_curie(std::string_view curie) const;
    bool is_registered(std::string_view iri) const;

    // Terms in registration order, owned (non-external) only.
    const std::vector<VocabTerm>& owned_terms() const { return owned_terms_; }

    // Proper superclass/superproperty ancestors of a registered term,
    // nearest first. Empty for unregistered IRIs.
    std::vector<std::string> super_closure(std::string_view iri) const;
    // Direct subclass/subproperty edges (child IRI, parent IRI) in
    // registration order of the child.
    std::vector<std::pair<std::string, std::string>> hierarchy_edges() const;

    // One rdf:type quad and one rdfs:label quad per owned term, plus a
    // subclass/subproperty quad where a super is declared.
    std::vector<rdf::Quad> emit_ontology_graph(const rdf::Term& graph) const;

    // Experiment facet -> scenario individual; nullopt when the experiment
    // is a known non-scenario experiment (e.g. historical).
    // Throws VocabError for entirely unknown experiments.
    std::optional<ScenarioInfo> scenario_for_experiment(std::string_view experiment) const;
    bool known_experiment(std::string_view experiment) const;

    const std::vector<DimensionInfo>& dimensions() const { return dimensions_; }
    const DimensionInfo& geodetic_dimension() const;
    const DimensionInfo& time_dimension() const;

private:
    void add_prefixes();
    void add_terms();
    void add_scenarios();
    void register_term(std::string curie, TermRole role, std::string label,
                       std::optional<std::string> super = std::nullopt,
                       bool external = false);
    void check_hierarchy_acyclic() const;

    IriMinter minter_;
    rdf::PrefixMap prefixes_;
    std::vector<VocabTerm> owned_terms_;
    std::map<std::string, VocabTerm> by_curie_;
    std::map<std::string, std::string> curie_by_iri_;
    std::set<std::string> owned_namespaces_;
    std::map<std::string, ScenarioInfo> scenarios_;
    std::set<std::string> plain_experiments_;
    std::vector<DimensionInfo> dimensions_;
};

}  // namespace ccskg::vocab
