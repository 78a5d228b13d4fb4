#include "ccskg/vocab/vocabulary.hpp"

#include <algorithm>

#include "ccskg/error.hpp"

namespace ccskg::vocab {

namespace {

constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

}  // namespace

Vocabulary::Vocabulary(std::string base_iri) : minter_(std::move(base_iri)) {
    add_prefixes();
    add_terms();
    add_scenarios();
    check_hierarchy_acyclic();
    dimensions_ = {
        {"geodetic", "data:Continuum", "Geodetic space"},
        {"time", "data:Continuum", "Time"},
    };
}

void Vocabulary::add_prefixes() {
    prefixes_.add("rdf", std::string(kRdfNs));
    prefixes_.add("rdfs", std::string(kRdfsNs));
    prefixes_.add("owl", std::string(kOwlNs));
    prefixes_.add("xsd", std::string(kXsdNs));

    prefixes_.add("top", minter_.onto_root("top-level"));
    prefixes_.add("ccso", minter_.onto_root("ccso"));
    prefixes_.add("data", minter_.onto_root("data"));

    const std::string data_root = minter_.data_root();
    prefixes_.add("cf", data_root + "variable/cf/");
    prefixes_.add("mip", data_root + "variable/mip/");
    prefixes_.add("climdex", data_root + "variable/climdex/");
    prefixes_.add("sim", data_root + "simulation/");
    prefixes_.add("model", data_root + "model/");
    prefixes_.add("institution", data_root + "institution/");
    // Canonical first, then aliases used by the bundled queries.
    prefixes_.add("rcp", data_root + "scenario/");
    prefixes_.add("scenario", data_root + "scenario/");
    prefixes_.add("dim", data_root + "dimension/");
    prefixes_.add("dimension", data_root + "dimension/");
    prefixes_.add("grid", data_root + "grid/");
    prefixes_.add("region", data_root + "region/");

    owned_namespaces_ = {minter_.onto_root("top-level"), minter_.onto_root("ccso"),
                         minter_.onto_root("data")};
}

void Vocabulary::register_term(std::string curie, TermRole role, std::string label,
                               std::optional<std::string> super, bool external) {
    VocabTerm term{curie, prefixes_.expand(curie), role, std::move(label), std::move(super),
                   external};
    if (by_curie_.count(term.curie)) {
        throw VocabError("duplicate vocabulary term: " + term.curie);
    }
    if (term.super && !by_curie_.count(*term.super)) {
        throw VocabError("unknown super term '" + *term.super + "' for " + term.curie);
    }
    curie_by_iri_[term.iri] = term.curie;
    if (!external) owned_terms_.push_back(term);
    by_curie_.emplace(std::move(curie), std::move(term));
}

void Vocabulary::add_terms() {
    // External helper terms used in emitted quads and bundled files.
    register_term("rdf:type", TermRole::ObjectProperty, "type", std::nullopt, true);
    register_term("rdfs:label", TermRole::DatatypeProperty, "label", std::nullopt, true);
    register_term("rdfs:comment", TermRole::DatatypeProperty, "comment", std::nullopt, true);
    register_term("rdfs:subClassOf", TermRole::ObjectProperty, "subclass of", std::nullopt, true);
    register_term("rdfs:subPropertyOf", TermRole::ObjectProperty, "subproperty of", std::nullopt,
                  true);
    register_term("owl:Class", TermRole::Class, "Class", std::nullopt, true);
    register_term("owl:ObjectProperty", TermRole::Class, "Object property", std::nullopt, true);
    register_term("owl:DatatypeProperty", TermRole::Class, "Datatype property", std::nullopt,
                  true);

    // Common terms shared across the whole graph.
    register_term("top:hasPart", TermRole::ObjectProperty, "has part");
    register_term("top:Organization", TermRole::Class, "Organization");
    register_term("top:isAttributedTo", TermRole::ObjectProperty, "is attributed to");

    // Models.
    register_term("ccso:Model", TermRole::Class, "Model");
    register_term("ccso:ClimateModel", TermRole::Class, "Climate model", "ccso:Model");
    register_term("ccso:GlobalClimateModel", TermRole::Class, "Global climate model",
                  "ccso:ClimateModel");
    register_term("ccso:RegionalClimateModel", TermRole::Class, "Regional climate model",
                  "ccso:ClimateModel");
    register_term("ccso:LocalClimateModel", TermRole::Class, "Local climate model",
                  "ccso:ClimateModel");
    register_term("ccso:ConvectionPermittingModel", TermRole::Class,
                  "Convection permitting model", "ccso:LocalClimateModel");
    register_term("ccso:IntegratedAssessmentModel", TermRole::Class,
                  "Integrated assessment model", "ccso:Model");

    // Simulations.
    register_term("ccso:Simulation", TermRole::Class, "Simulation");
    register_term("ccso:ModelBasedSimulation", TermRole::Class, "Model based simulation",
                  "ccso:Simulation");
    register_term("ccso:ClimateModelSimulation", TermRole::Class, "Climate model simulation",
                  "ccso:ModelBasedSimulation");
    register_term("ccso:GlobalClimateSimulation", TermRole::Class, "Global climate simulation",
                  "ccso:ClimateModelSimulation");
    register_term("ccso:DynamicalDownscaling", TermRole::Class, "Dynamical downscaling",
                  "ccso:ClimateModelSimulation");

    // Scenarios.
    register_term("ccso:EmissionScenario", TermRole::Class, "Emission scenario");
    register_term("ccso:RCP", TermRole::Class, "Representative concentration pathway",
                  "ccso:EmissionScenario");
    register_term("ccso:SSP", TermRole::Class, "Shared socioeconomic pathway",
                  "ccso:EmissionScenario");

    register_term("ccso:refersToScenario", TermRole::ObjectProperty, "refers to scenario");
    register_term("ccso:hasOutput", TermRole::ObjectProperty, "has output");
    register_term("ccso:isDownscalingOf", TermRole::ObjectProperty, "is downscaling of");
    register_term("ccso:isExecutionOf", TermRole::ObjectProperty, "is execution of");

    // Variables, dimensional spaces, datasets.
    register_term("data:Variable", TermRole::Class, "Variable");
    register_term("data:DependentVariable", TermRole::Class, "Dependent variable",
                  "data:Variable");
    register_term("data:IndependentVariable", TermRole::Class, "Independent variable",
                  "data:Variable");
    register_term("data:FiniteVariable", TermRole::Class, "Finite variable", "data:Variable");
    register_term("data:DimensionalSpace", TermRole::Class, "Dimensional space",
                  "data:IndependentVariable");
    register_term("data:FiniteDimensionalSpace", TermRole::Class, "Finite dimensional space",
                  "data:DimensionalSpace");
    register_term("data:Continuum", TermRole::Class, "Continuum", "data:DimensionalSpace");
    register_term("data:DiscreteDimensionalSpace", TermRole::Class,
                  "Discrete dimensional space", "data:DimensionalSpace");
    register_term("data:Grid", TermRole::Class, "Grid", "data:DiscreteDimensionalSpace");
    register_term("data:RollingRegularGrid", TermRole::Class, "Rolling regular grid",
                  "data:Grid");
    register_term("data:Region", TermRole::Class, "Region");
    register_term("data:Dataset", TermRole::Class, "Dataset");
    register_term("data:DataSource", TermRole::Class, "Data source");
    register_term("data:DataFormat", TermRole::Class, "Data format");

    register_term("data:hasValuesOn", TermRole::ObjectProperty, "has values on");
    register_term("data:hasDataSerialisation", TermRole::ObjectProperty,
                  "has data serialisation");
    register_term("data:hasAvailableDataFormat", TermRole::ObjectProperty,
                  "has available data format");
    register_term("data:holdsSpecializationOfVariable", TermRole::ObjectProperty,
                  "holds specialization of variable");
    register_term("data:isSpecializationOfVariable", TermRole::ObjectProperty,
                  "is specialization of variable", "data:holdsSpecializationOfVariable");
    register_term("data:derivedFromVariable", TermRole::ObjectProperty,
                  "derived from variable");
    register_term("data:dependsOnVariable", TermRole::ObjectProperty, "depends on variable");
    register_term("data:hasDiscretization", TermRole::ObjectProperty, "has discretization");
    register_term("data:coversRegion", TermRole::ObjectProperty, "covers region");

    register_term("data:hasResolutionValue", TermRole::DatatypeProperty,
                  "has resolution value");
    register_term("data:hasCanonicalUnit", TermRole::DatatypeProperty, "has canonical unit");
    register_term("data:hasCellMethods", TermRole::DatatypeProperty, "has cell methods");
    register_term("data:hasRotatedPole", TermRole::DatatypeProperty, "has rotated pole");
}

void Vocabulary::add_scenarios() {
    scenarios_ = {
        {"rcp26", {"RCP2.6", "ccso:RCP", "RCP 2.6"}},
        {"rcp45", {"RCP4.5", "ccso:RCP", "RCP 4.5"}},
        {"rcp60", {"RCP6", "ccso:RCP", "RCP 6"}},
        {"rcp85", {"RCP8.5", "ccso:RCP", "RCP 8.5"}},
        {"ssp126", {"SSP1-2.6", "ccso:SSP", "SSP1-2.6"}},
        {"ssp245", {"SSP2-4.5", "ccso:SSP", "SSP2-4.5"}},
        {"ssp370", {"SSP3-7.0", "ccso:SSP", "SSP3-7.0"}},
        {"ssp585", {"SSP5-8.5", "ccso:SSP", "SSP5-8.5"}},
    };
    plain_experiments_ = {"historical", "piControl", "amip", "esmHistorical", "evaluation"};
}

void Vocabulary::check_hierarchy_acyclic() const {
    for (const auto& [curie, term] : by_curie_) {
        std::set<std::string> seen{curie};
        const VocabTerm* cursor = &term;
        while (cursor->super) {
            if (!seen.insert(*cursor->super).second) {
                throw VocabError("cycle in term hierarchy at " + *cursor->super);
            }
            cursor = &by_curie_.at(*cursor->super);
        }
    }
}

rdf::Term Vocabulary::expand(std::string_view curie) const {
    std::string iri = prefixes_.expand(curie);
    for (const auto& ns : owned_namespaces_) {
        if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
            if (!curie_by_iri_.count(iri)) {
                throw VocabError("unregistered vocabulary term: " + std::string(curie));
            }
            break;
        }
    }
    return rdf::Term::iri(std::move(iri));
}

std::optional<std::string> Vocabulary::compact(std::string_view iri) const {
    return prefixes_.compact(iri);
}

const VocabTerm* Vocabulary::find_by_iri(std::string_view iri) const {
    auto it = curie_by_iri_.find(std::string(iri));
    if (it == curie_by_iri_.end()) return nullptr;
    return &by_curie_.at(it->second);
}

const VocabTerm* Vocabulary::find_by_curie(std::string_view curie) const {
    auto it = by_curie_.find(std::string(curie));
    if (it == by_curie_.end()) return nullptr;
    return &it->second;
}

bool Vocabulary::is_registered(std::string_view iri) const {
    return curie_by_iri_.count(std::string(iri)) > 0;
}

std::vector<std::string> Vocabulary::super_closure(std::string_view iri) const {
    std::vector<std::string> out;
    const VocabTerm* term = find_by_iri(iri);
    if (!term) return out;
    while (term->super) {
        term = &by_curie_.at(*term->super);
        out.push_back(term->iri);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> Vocabulary::hierarchy_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const VocabTerm& term : owned_terms_) {
        if (term.super) {
            out.emplace_back(term.iri, by_curie_.at(*term.super).iri);
        }
    }
    return out;
}

std::vector<rdf::Quad> Vocabulary::emit_ontology_graph(const rdf::Term& graph) const {
    const rdf::Term type_pred = rdf::Term::iri(std::string(rdf::iri::rdf_type));
    const rdf::Term label_pred = expand("rdfs:label");
    const rdf::Term subclass_pred = expand("rdfs:subClassOf");
    const rdf::Term subproperty_pred = expand("rdfs:subPropertyOf");
    const rdf::Term owl_class = expand("owl:Class");
    const rdf::Term owl_object_property = expand("owl:ObjectProperty");
    const rdf::Term owl_datatype_property = expand("owl:DatatypeProperty");

    std::vector<rdf::Quad> out;
    for (const VocabTerm& term : owned_terms_) {
        rdf::Term subject = rdf::Term::iri(term.iri);
        const rdf::Term* kind = &owl_class;
        if (term.role == TermRole::ObjectProperty) kind = &owl_object_property;
        if (term.role == TermRole::DatatypeProperty) kind = &owl_datatype_property;
        out.emplace_back(subject, type_pred, *kind, graph);
        out.emplace_back(subject, label_pred, rdf::Term::lang_literal(term.label, "en"), graph);
        if (term.super) {
            const rdf::Term& link =
                term.role == TermRole::Class ? subclass_pred : subproperty_pred;
            out.emplace_back(subject, link, rdf::Term::iri(by_curie_.at(*term.super).iri),
                             graph);
        }
    }
    return out;
}

std::optional<ScenarioInfo> Vocabulary::scenario_for_experiment(
    std::string_view experiment) const {
    auto it = scenarios_.find(std::string(experiment));
    if (it != scenarios_.end()) return it->second;
    if (plain_experiments_.count(std::string(experiment))) return std::nullopt;
    throw VocabError("unknown experiment facet: " + std::string(experiment));
}

bool Vocabulary::known_experiment(std::string_view experiment) const {
    return scenarios_.count(std::string(experiment)) > 0 ||
           plain_experiments_.count(std::string(experiment)) > 0;
}

const DimensionInfo& Vocabulary::geodetic_dimension() const { return dimensions_[0]; }
const DimensionInfo& Vocabulary::time_dimension() const { return dimensions_[1]; }

}  // namespace ccskg::vocab
