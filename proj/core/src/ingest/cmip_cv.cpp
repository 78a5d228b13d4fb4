#include "ccskg/ingest/cmip_cv.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "ccskg/error.hpp"

namespace ccskg::ingest {

CvContent parse_cmip_cv(std::string_view json, WarningLog& log) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid CV JSON: ") + e.what(), 1, 1);
    }
    if (!doc.is_object()) throw ParseError("CV document is not a JSON object", 1, 1);

    CvContent out;
    std::set<std::string> institution_ids;

    if (auto it = doc.find("institution_id"); it != doc.end() && it->is_object()) {
        for (auto entry = it->begin(); entry != it->end(); ++entry) {
            std::string name =
                entry.value().is_string() ? entry.value().get<std::string>() : entry.key();
            out.institutions.push_back({entry.key(), std::move(name)});
            institution_ids.insert(entry.key());
        }
    }

    if (auto it = doc.find("source_id"); it != doc.end() && it->is_object()) {
        for (auto entry = it->begin(); entry != it->end(); ++entry) {
            ModelRecord model;
            model.id = entry.key();
            model.name = entry.key();
            if (entry.value().is_object()) {
                if (auto label = entry.value().find("label");
                    label != entry.value().end() && label->is_string()) {
                    model.name = label->get<std::string>();
                }
                if (auto inst = entry.value().find("institution_id");
                    inst != entry.value().end() && inst->is_array() && !inst->empty() &&
                    inst->front().is_string()) {
                    model.institution = inst->front().get<std::string>();
                }
            }
            if (model.institution && !institution_ids.count(*model.institution)) {
                log.add("cmip-cv", model.id,
                        "institution not in CV: " + *model.institution);
            }
            out.models.push_back(std::move(model));
        }
    }
    return out;
}

}  // namespace ccskg::ingest
