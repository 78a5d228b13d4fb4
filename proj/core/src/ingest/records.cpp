#include "ccskg/ingest/records.hpp"

namespace ccskg::ingest {

std::string to_string(Project project) {
    return project == Project::Cmip5 ? "cmip5" : "cordex";
}

std::string DrsComponents::simulation_key() const {
    std::string key = to_string(project) + ".";
    if (project == Project::Cordex && cordex) {
        key += cordex->domain + ".";
    }
    key += model + "." + experiment + "." + ensemble.text();
    return key;
}

namespace {

void put(Record& r, const std::string& name, const std::string& value) {
    r.fields[name] = value;
}

void put(Record& r, const std::string& name, const std::optional<std::string>& value) {
    if (value) r.fields[name] = *value;
}

}  // namespace

Record to_record(const CfVariable& v) {
    Record r{"cf_variable", v.standard_name, {}};
    put(r, "standard_name", v.standard_name);
    put(r, "canonical_unit", v.canonical_unit);
    put(r, "description", v.description);
    return r;
}

Record to_record(const MipVariable& v) {
    Record r{"mip_variable", v.short_name, {}};
    put(r, "short_name", v.short_name);
    put(r, "cf_standard_name", v.cf_standard_name);
    put(r, "cell_methods", v.cell_methods);
    put(r, "realm", v.realm);
    put(r, "positive", v.positive);
    return r;
}

Record to_record(const CordexDomain& d) {
    Record r{"cordex_domain", d.grid_id, {}};
    put(r, "grid", d.grid_id);
    put(r, "domain", d.domain_name);
    put(r, "region", d.region);
    put(r, "rotated_pole", std::string(d.rotated_pole ? "true" : "false"));
    put(r, "resolution", d.resolution_degrees);
    return r;
}

Record to_record(const ClimdexIndex& i) {
    Record r{"climdex_index", i.index_id, {}};
    put(r, "id", i.index_id);
    put(r, "definition", i.definition);
    put(r, "source_variable", i.source_variable);
    return r;
}

Record to_record(const InstitutionRecord& rec) {
    Record r{"institution", rec.id, {}};
    put(r, "id", rec.id);
    put(r, "name", rec.name);
    return r;
}

Record to_record(const ModelRecord& rec) {
    Record r{"model", rec.id, {}};
    put(r, "id", rec.id);
    put(r, "name", rec.name);
    put(r, "institution", rec.institution);
    return r;
}

const std::map<std::string, std::vector<std::string>>& record_schemas() {
    static const std::map<std::string, std::vector<std::string>> schemas = {
        {"cf_variable", {"standard_name", "canonical_unit", "description"}},
        {"mip_variable", {"short_name", "cf_standard_name", "cell_methods", "realm", "positive"}},
        {"cordex_domain", {"grid", "domain", "region", "rotated_pole", "resolution"}},
        {"climdex_index", {"id", "definition", "source_variable"}},
        {"institution", {"id", "name"}},
        {"model", {"id", "name", "institution"}},
    };
    return schemas;
}

}  // namespace ccskg::ingest
