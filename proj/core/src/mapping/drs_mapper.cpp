#include "ccskg/mapping/drs_mapper.hpp"

#include <algorithm>
#include <set>

namespace ccskg::mapping {

using ingest::DatasetRecord;
using ingest::Project;
using rdf::Quad;
using rdf::Term;

namespace {

class DrsMapping {
public:
    DrsMapping(const vocab::Vocabulary& vocab, const std::string& graph_name,
               ingest::WarningLog& log)
        : vocab_(vocab),
          minter_(vocab.minter()),
          graph_(minter_.graph(graph_name)),
          log_(log),
          type_pred_(Term::iri(std::string(rdf::iri::rdf_type))) {}

    std::vector<Quad> run(std::span<const DatasetRecord> records) {
        for (const DatasetRecord& record : records) map_record(record);
        std::sort(quads_.begin(), quads_.end(),
                  [](const Quad& a, const Quad& b) { return a.key() < b.key(); });
        return std::move(quads_);
    }

private:
    void push(const Term& s, const Term& p, const Term& o) {
        Quad q(s, p, o, graph_);
        if (seen_.insert(q.key()).second) quads_.push_back(std::move(q));
    }

    void push_type(const Term& s, const char* class_curie) {
        push(s, type_pred_, vocab_.expand(class_curie));
    }

    void push_label(const Term& s, const std::string& label) {
        push(s, vocab_.expand("rdfs:label"), Term::literal(label));
    }

    // The generic dimension individual an axis specializes.
    Term dimension_node(const vocab::DimensionInfo& info) {
        Term node = minter_.dimension(info.name);
        push_type(node, info.class_curie.c_str());
        push(node, vocab_.expand("rdfs:label"), Term::lang_literal(info.label, "en"));
        return node;
    }

    Term simulation_node(const DatasetRecord& record) {
        const auto& drs = record.drs;
        const std::string key = drs.simulation_key();
        Term sim = minter_.simulation(key);
        push_type(sim, drs.project == Project::Cordex ? "ccso:DynamicalDownscaling"
                                                      : "ccso:GlobalClimateSimulation");
        push_label(sim, key);

        Term model = minter_.model(drs.model);
        push_type(model, drs.project == Project::Cordex ? "ccso:RegionalClimateModel"
                                                        : "ccso:GlobalClimateModel");
        push(sim, vocab_.expand("ccso:isExecutionOf"), model);

        try {
            if (auto scenario = vocab_.scenario_for_experiment(drs.experiment)) {
                Term node = minter_.scenario(scenario->name);
                push_type(node, scenario->class_curie.c_str());
                push(node, vocab_.expand("rdfs:label"),
                     Term::lang_literal(scenario->label, "en"));
                push(sim, vocab_.expand("ccso:refersToScenario"), node);
            }
        } catch (const VocabError&) {
            log_.add(to_string(drs.project) + "-datasets", key,
                     "experiment not in scenario registry: " + drs.experiment);
        }

        if (drs.project == Project::Cordex && drs.cordex) {
            // The regional run is a downscaling of the driving global run.
            std::string driving_key = "cmip5." + drs.cordex->driving_model + "." +
                                      drs.experiment + "." + drs.cordex->driving_ensemble;
            push(sim, vocab_.expand("ccso:isDownscalingOf"), minter_.simulation(driving_key));
        }
        return sim;
    }

    void map_record(const DatasetRecord& record) {
        const auto& drs = record.drs;
        Term sim = simulation_node(record);

        const std::string output_label = drs.product.value_or("output1");
        Term output = minter_.dataset(sim, output_label);
        push_type(output, "data:Dataset");
        push_label(output, output_label);
        push(sim, vocab_.expand("ccso:hasOutput"), output);

        const std::string suffix =
            record.variable + "." + drs.frequency.value_or(record.time_resolution);
        Term dataset = minter_.dataset(output, suffix);
        push_type(dataset, "data:Dataset");
        push_label(dataset, suffix);
        push(output, vocab_.expand("top:hasPart"), dataset);
        push(dataset, vocab_.expand("data:holdsSpecializationOfVariable"),
             minter_.mip_variable(record.variable));

        // Time axis with a shared duration grid.
        Term time_axis = minter_.dataset(dataset, "time");
        push_type(time_axis, "data:IndependentVariable");
        push(time_axis, vocab_.expand("data:isSpecializationOfVariable"),
             dimension_node(vocab_.time_dimension()));
        push(dataset, vocab_.expand("data:dependsOnVariable"), time_axis);
        Term time_grid = minter_.grid("time-" + record.time_resolution);
        push_type(time_grid, "data:RollingRegularGrid");
        push(time_grid, vocab_.expand("data:hasResolutionValue"),
             Term::literal(record.time_resolution, std::string(rdf::iri::xsd_duration)));
        push(time_axis, vocab_.expand("data:hasDiscretization"), time_grid);

        // Geodetic axis: a cordex row discretizes on its named domain grid
        // (the domain table owns that grid's description); a cmip5 row
        // mints a shared grid from its resolution facet.
        Term geo_axis = minter_.dataset(dataset, "geo");
        push_type(geo_axis, "data:IndependentVariable");
        push(geo_axis, vocab_.expand("data:isSpecializationOfVariable"),
             dimension_node(vocab_.geodetic_dimension()));
        push(dataset, vocab_.expand("data:dependsOnVariable"), geo_axis);
        if (drs.project == Project::Cordex && drs.cordex) {
            push(geo_axis, vocab_.expand("data:hasDiscretization"),
                 minter_.grid(drs.cordex->domain));
        } else if (record.geodetic_resolution) {
            Term geo_grid = minter_.grid("geodetic-" + *record.geodetic_resolution);
            push_type(geo_grid, "data:RollingRegularGrid");
            push(geo_grid, vocab_.expand("data:hasResolutionValue"),
                 Term::literal(*record.geodetic_resolution,
                               std::string(rdf::iri::xsd_decimal)));
            push(geo_axis, vocab_.expand("data:hasDiscretization"), geo_grid);
        } else {
            log_.add(to_string(drs.project) + "-datasets", drs.simulation_key(),
                     "dataset without domain or geodetic resolution: no discretization");
        }
    }

    const vocab::Vocabulary& vocab_;
    const vocab::IriMinter& minter_;
    Term graph_;
    ingest::WarningLog& log_;
    Term type_pred_;
    std::set<std::string> seen_;
    std::vector<Quad> quads_;
};

}  // namespace

std::vector<Quad> map_drs(std::span<const DatasetRecord> records,
                          const vocab::Vocabulary& vocab, const std::string& graph_name,
                          ingest::WarningLog& log) {
    return DrsMapping(vocab, graph_name, log).run(records);
}

}  // namespace ccskg::mapping
