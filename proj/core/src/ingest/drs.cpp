#include "ccskg/ingest/drs.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ccskg::ingest {

namespace {

std::vector<std::string> split_facets(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == '.') {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    for (const auto& facet : out) {
        if (facet.empty()) {
            throw DrsError("empty facet in identifier: " + std::string(text));
        }
    }
    return out;
}

int parse_positive_index(std::string_view digits, std::string_view whole, char tag) {
    if (digits.empty()) {
        throw DrsError("ensemble facet '" + std::string(whole) + "' missing digits after '" +
                       std::string(1, tag) + "'");
    }
    long value = 0;
    for (char c : digits) {
        value = value * 10 + (c - '0');
        if (value > 1000000) throw DrsError("ensemble index out of range: " + std::string(whole));
    }
    if (value < 1) {
        throw DrsError("ensemble index must be positive in '" + std::string(whole) + "'");
    }
    return static_cast<int>(value);
}

bool is_version_facet(std::string_view facet) {
    if (facet.size() < 2 || facet[0] != 'v') return false;
    for (std::size_t i = 1; i < facet.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(facet[i]))) return false;
    }
    return true;
}

// "MOHC-HadCM3" -> "HadCM3"; the leading institute token is dropped. Model
// names may themselves contain hyphens (HadGEM2-ES), so only the first
// token goes.
std::string strip_institute_prefix(const std::string& driving_model) {
    auto dash = driving_model.find('-');
    if (dash == std::string::npos || dash + 1 == driving_model.size()) return driving_model;
    return driving_model.substr(dash + 1);
}

}  // namespace

EnsembleMember parse_ensemble(std::string_view text) {
    // Grammar: r<digits>i<digits>p<digits>
    std::size_t pos = 0;
    auto take_digits = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    };
    if (pos >= text.size() || text[pos] != 'r') {
        throw DrsError("ensemble facet must start with 'r': " + std::string(text));
    }
    ++pos;
    auto r = take_digits();
    if (pos >= text.size() || text[pos] != 'i') {
        throw DrsError("ensemble facet missing 'i' section: " + std::string(text));
    }
    ++pos;
    auto i = take_digits();
    if (pos >= text.size() || text[pos] != 'p') {
        throw DrsError("ensemble facet missing 'p' section: " + std::string(text));
    }
    ++pos;
    auto p = take_digits();
    if (pos != text.size()) {
        throw DrsError("trailing characters in ensemble facet: " + std::string(text));
    }
    return {parse_positive_index(r, text, 'r'), parse_positive_index(i, text, 'i'),
            parse_positive_index(p, text, 'p')};
}

DrsComponents parse_drs_id(std::string_view text, Project project) {
    std::vector<std::string> facets = split_facets(text);
    if (facets.empty() || facets.front() != to_string(project)) {
        throw DrsError("identifier does not start with project facet '" + to_string(project) +
                       "': " + std::string(text));
    }

    DrsComponents out;
    out.project = project;

    // A trailing version facet is provenance only.
    if (facets.size() > 1 && is_version_facet(facets.back())) {
        out.version = facets.back();
        facets.pop_back();
    }

    if (project == Project::Cmip5) {
        if (facets.size() == 4) {
            out.model = facets[1];
            out.experiment = facets[2];
            out.ensemble = parse_ensemble(facets[3]);
        } else if (facets.size() == 9) {
            out.product = facets[1];
            out.institute = facets[2];
            out.model = facets[3];
            out.experiment = facets[4];
            out.frequency = facets[5];
            out.realm = facets[6];
            out.mip_table = facets[7];
            out.ensemble = parse_ensemble(facets[8]);
        } else {
            throw DrsError("cmip5 identifier must have 4 or 9 facets, got " +
                           std::to_string(facets.size()) + ": " + std::string(text));
        }
    } else {
        if (facets.size() != 9) {
            throw DrsError("cordex identifier must have 9 facets, got " +
                           std::to_string(facets.size()) + ": " + std::string(text));
        }
        CordexFacets extras;
        out.product = facets[1];
        extras.domain = facets[2];
        out.institute = facets[3];
        extras.driving_model_raw = facets[4];
        extras.driving_model = strip_institute_prefix(facets[4]);
        out.experiment = facets[5];
        extras.driving_ensemble = facets[6];
        out.model = facets[7];
        out.frequency = facets[8];
        // The regional run is keyed by the member it downscales.
        out.ensemble = parse_ensemble(extras.driving_ensemble);
        out.cordex = std::move(extras);
    }
    return out;
}

}  // namespace ccskg::ingest
