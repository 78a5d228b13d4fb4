#include "ccskg/ingest/cmor_table.hpp"

#include <nlohmann/json.hpp>

#include "ccskg/error.hpp"

namespace ccskg::ingest {

namespace {

std::optional<std::string> string_member(const nlohmann::ordered_json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end() || !it->is_string()) return std::nullopt;
    std::string value = it->get<std::string>();
    if (value.empty()) return std::nullopt;
    return value;
}

}  // namespace

std::vector<MipVariable> parse_cmor_table(std::string_view json,
                                          const std::set<std::string>* cf_names,
                                          WarningLog& log) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid CMOR table JSON: ") + e.what(), 1, 1);
    }
    if (!doc.is_object()) throw ParseError("CMOR table is not a JSON object", 1, 1);

    std::vector<MipVariable> out;
    auto entries = doc.find("variable_entry");
    if (entries == doc.end()) return out;
    if (!entries->is_object()) throw ParseError("variable_entry is not a JSON object", 1, 1);

    for (auto it = entries->begin(); it != entries->end(); ++it) {
        MipVariable v;
        v.short_name = it.key();
        if (it.value().is_object()) {
            v.cf_standard_name = string_member(it.value(), "standard_name");
            v.cell_methods = string_member(it.value(), "cell_methods");
            v.realm = string_member(it.value(), "modeling_realm");
            v.positive = string_member(it.value(), "positive");
        }
        if (!v.cf_standard_name) {
            v.resolved = false;
            log.add("cmor", v.short_name, "missing standard_name");
        } else if (cf_names && !cf_names->count(*v.cf_standard_name)) {
            v.resolved = false;
            log.add("cmor", v.short_name,
                    "standard_name not in CF table: " + *v.cf_standard_name);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ccskg::ingest
