#include "ccskg/ingest/tabular.hpp"

#include <cctype>

#include "ccskg/error.hpp"
#include "ccskg/ingest/drs.hpp"

namespace ccskg::ingest {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no, line.size() + 1);
    out.push_back(field);
    return out;
}

bool is_decimal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, dot = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '.' && !dot) {
            dot = true;
        } else {
            return false;
        }
    }
    return digits;
}

}  // namespace

std::vector<std::map<std::string, std::string>> read_csv(std::string_view text) {
    std::vector<std::map<std::string, std::string>> out;
    std::vector<std::string> header;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        std::string line(text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                          : end - start));
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line, line_no);
        if (header.empty()) {
            header = std::move(fields);
            continue;
        }
        if (fields.size() != header.size()) {
            throw ParseError("row has " + std::to_string(fields.size()) + " fields, header has " +
                                 std::to_string(header.size()),
                             line_no, 1);
        }
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = fields[i];
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<CordexDomain> parse_cordex_domains(std::string_view csv, WarningLog& log) {
    std::vector<CordexDomain> out;
    for (const auto& row : read_csv(csv)) {
        CordexDomain d;
        auto get = [&](const char* name) {
            auto it = row.find(name);
            return it == row.end() ? std::string() : it->second;
        };
        d.grid_id = get("grid");
        d.domain_name = get("domain");
        d.region = get("region");
        d.resolution_degrees = get("resolution");
        if (d.grid_id.empty()) {
            log.add("cordex-domains", "?", "row without grid id skipped");
            continue;
        }
        if (!is_decimal(d.resolution_degrees)) {
            log.add("cordex-domains", d.grid_id,
                    "non-numeric resolution: " + d.resolution_degrees);
            continue;
        }
        d.rotated_pole = !d.grid_id.empty() && d.grid_id.back() != 'i';
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<ClimdexIndex> parse_climdex(std::string_view csv,
                                        const std::set<std::string>* mip_names,
                                        WarningLog& log) {
    std::vector<ClimdexIndex> out;
    for (const auto& row : read_csv(csv)) {
        ClimdexIndex idx;
        auto get = [&](const char* name) {
            auto it = row.find(name);
            return it == row.end() ? std::string() : it->second;
        };
        idx.index_id = get("id");
        idx.definition = get("definition");
        idx.source_variable = get("source_variable");
        if (idx.index_id.empty() || idx.source_variable.empty()) {
            log.add("climdex", idx.index_id.empty() ? "?" : idx.index_id,
                    "row missing id or source_variable skipped");
            continue;
        }
        if (mip_names && !mip_names->count(idx.source_variable)) {
            idx.resolved = false;
            log.add("climdex", idx.index_id,
                    "source variable not in MIP tables: " + idx.source_variable);
        }
        out.push_back(std::move(idx));
    }
    return out;
}

std::vector<DatasetRecord> parse_dataset_manifest(std::string_view csv, Project project,
                                                  WarningLog& log) {
    const std::string source = to_string(project) + "-datasets";
    std::vector<DatasetRecord> out;
    for (const auto& row : read_csv(csv)) {
        auto get = [&](const char* name) {
            auto it = row.find(name);
            return it == row.end() ? std::string() : it->second;
        };
        std::string id = get("id");
        if (id.empty()) {
            log.add(source, "?", "row without id skipped");
            continue;
        }
        DatasetRecord record;
        try {
            record.drs = parse_drs_id(id, project);
        } catch (const DrsError& e) {
            log.add(source, id, e.what());
            continue;
        }
        record.variable = get("variable");
        if (record.variable.empty()) {
            log.add(source, id, "row without variable skipped");
            continue;
        }
        std::string geo = get("geodetic_resolution");
        if (!geo.empty()) {
            if (!is_decimal(geo)) {
                log.add(source, id, "non-numeric geodetic resolution: " + geo);
                continue;
            }
            record.geodetic_resolution = geo;
        }
        record.time_resolution = get("time_resolution");
        if (record.time_resolution.empty()) {
            log.add(source, id, "row without time_resolution skipped");
            continue;
        }
        out.push_back(std::move(record));
    }
    return out;
}

}  // namespace ccskg::ingest
