#include "ccskg/ingest/cf_table.hpp"

#include <set>

#include "xml_reader.hpp"

namespace ccskg::ingest {

std::vector<CfVariable> parse_cf_table(std::string_view xml, WarningLog& log) {
    auto root = detail::parse_xml(xml);
    std::vector<CfVariable> out;
    std::set<std::string> seen;
    std::size_t position = 0;
    for (const auto& child : root->children) {
        if (child->name != "entry") continue;
        ++position;
        auto id = child->attributes.find("id");
        if (id == child->attributes.end() || id->second.empty()) {
            log.add("cf", "entry#" + std::to_string(position), "entry without id skipped");
            continue;
        }
        if (!seen.insert(id->second).second) {
            log.add("cf", id->second, "duplicate standard name skipped");
            continue;
        }
        out.push_back({id->second, child->child_text("canonical_units"),
                       child->child_text("description")});
    }
    return out;
}

}  // namespace ccskg::ingest
