#include "ccskg/vocab/iri_minter.hpp"

#include <cctype>

#include "ccskg/error.hpp"

namespace ccskg::vocab {

IriMinter::IriMinter(std::string base_iri) : base_(std::move(base_iri)) {
    if (!rdf::has_iri_scheme(base_)) {
        throw VocabError("base IRI must be absolute: " + base_);
    }
    if (base_.back() != '/') base_ += '/';
}

std::string IriMinter::encode_value(std::string_view value) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(value.size());
    for (char c : value) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || c == '-' || c == '.' || c == '_' || c == '~') {
            out += c;
        } else {
            out += '%';
            out += hex[(u >> 4) & 0xF];
            out += hex[u & 0xF];
        }
    }
    return out;
}

rdf::Term IriMinter::instance(std::string_view path) const {
    return rdf::Term::iri(data_root() + std::string(path));
}

rdf::Term IriMinter::cf_variable(std::string_view name) const {
    return instance("variable/cf/" + encode_value(name));
}

rdf::Term IriMinter::mip_variable(std::string_view name) const {
    return instance("variable/mip/" + encode_value(name));
}

rdf::Term IriMinter::climdex_index(std::string_view id) const {
    return instance("variable/climdex/" + encode_value(id));
}

rdf::Term IriMinter::model(std::string_view id) const {
    return instance("model/" + encode_value(id));
}

rdf::Term IriMinter::institution(std::string_view id) const {
    return instance("institution/" + encode_value(id));
}

rdf::Term IriMinter::simulation(std::string_view key) const {
    return instance("simulation/" + encode_value(key));
}

rdf::Term IriMinter::scenario(std::string_view name) const {
    return instance("scenario/" + encode_value(name));
}

rdf::Term IriMinter::grid(std::string_view id) const {
    return instance("grid/" + encode_value(id));
}

rdf::Term IriMinter::region(std::string_view name) const {
    return instance("region/" + encode_value(name));
}

rdf::Term IriMinter::dimension(std::string_view name) const {
    return instance("dimension/" + encode_value(name));
}

rdf::Term IriMinter::dataset(const rdf::Term& parent, std::string_view suffix) const {
    return rdf::Term::iri(parent.value() + "/" + encode_value(suffix));
}

rdf::Term IriMinter::graph(std::string_view name) const {
    return rdf::Term::iri(base_ + "graph/" + encode_value(name));
}

}  // namespace ccskg::vocab
