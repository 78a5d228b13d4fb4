#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ccskg::ingest {

// One CF standard-name table entry.
struct CfVariable {
    std::string standard_name;
    std::string canonical_unit;
    std::string description;
};

// One MIP variable from a CMOR table.
struct MipVariable {
    std::string short_name;
    std::optional<std::string> cf_standard_name;
    std::optional<std::string> cell_methods;
    std::optional<std::string> realm;
    std::optional<std::string> positive;
    // False when cf_standard_name is absent or does not resolve against the
    // ingested CF table.
    bool resolved = true;
};

enum class Project { Cmip5, Cordex };

std::string to_string(Project project);

struct EnsembleMember {
    int realization = 0;
    int initialization = 0;
    int physics = 0;

    std::string text() const {
        return "r" + std::to_string(realization) + "i" + std::to_string(initialization) +
               "p" + std::to_string(physics);
    }
    bool operator==(const EnsembleMember&) const = default;
};

struct CordexFacets {
    std::string domain;
    std::string driving_model;     // bare model name, institute prefix stripped
    std::string driving_model_raw; // as written, e.g. "MOHC-HadCM3"
    std::string driving_ensemble;
    bool operator==(const CordexFacets&) const = default;
};

// Facets of a dot-separated dataset identifier.
struct DrsComponents {
    Project project = Project::Cmip5;
    std::optional<std::string> product;
    std::optional<std::string> institute;
    std::string model;
    std::string experiment;
    std::optional<std::string> frequency;
    std::optional<std::string> realm;
    std::optional<std::string> mip_table;
    EnsembleMember ensemble;
    // Captured from long identifiers but not modelled in the graph.
    std::optional<std::string> version;
    std::optional<CordexFacets> cordex;

    // The identity a simulation node is minted from. CMIP5:
    // project.model.experiment.ensemble; CORDEX adds the domain after the
    // project to keep keys distinct across domains.
    std::string simulation_key() const;

    bool operator==(const DrsComponents&) const = default;
};

// One row of the CORDEX domain table: a geodetic grid and its region.
struct CordexDomain {
    std::string grid_id;
    std::string domain_name;
    std::string region;
    bool rotated_pole = false;
    std::string resolution_degrees;  // lexical decimal, validated numeric
};

// One Climdex index definition.
struct ClimdexIndex {
    std::string index_id;
    std::string definition;
    std::string source_variable;
    bool resolved = true;
};

struct InstitutionRecord {
    std::string id;
    std::string name;
};

struct ModelRecord {
    std::string id;
    std::string name;
    std::optional<std::string> institution;
};

// One dataset row: identifier facets plus the per-dataset description
// facets carried by the manifest.
struct DatasetRecord {
    DrsComponents drs;
    std::string variable;
    std::optional<std::string> geodetic_resolution;  // decimal degrees
    std::string time_resolution;                     // ISO-8601 duration
};

// Flat field view of a record, consumed by the declarative mapping rules.
// Only present fields appear.
struct Record {
    std::string kind;
    std::string locator;  // for warnings
    std::map<std::string, std::string> fields;

    std::optional<std::string> get(const std::string& name) const {
        auto it = fields.find(name);
        if (it == fields.end()) return std::nullopt;
        return it->second;
    }
};

Record to_record(const CfVariable& v);
Record to_record(const MipVariable& v);
Record to_record(const CordexDomain& d);
Record to_record(const ClimdexIndex& i);
Record to_record(const InstitutionRecord& r);
Record to_record(const ModelRecord& r);

// Field names allowed per record kind; compile-time validation for rules.
const std::map<std::string, std::vector<std::string>>& record_schemas();

}  // namespace ccskg::ingest
