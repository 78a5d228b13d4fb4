#include "ccskg/mapping/rules.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace ccskg::mapping {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string token;
    bool quoted = false;
    for (char c : line) {
        if (quoted) {
            token += c;
            if (c == '"') quoted = false;
            continue;
        }
        if (c == '"') {
            token += c;
            quoted = true;
        } else if (c == ' ' || c == '\t') {
            if (!token.empty()) {
                out.push_back(token);
                token.clear();
            }
        } else {
            token += c;
        }
    }
    if (!token.empty()) out.push_back(token);
    return out;
}

IriTemplate parse_template(const std::string& text, const std::string& rule_id) {
    IriTemplate tpl;
    std::string body = text;
    if (!body.empty() && body.front() == '<' && body.back() == '>') {
        tpl.absolute = true;
        body = body.substr(1, body.size() - 2);
    }
    std::string literal;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '{') {
            auto end = body.find('}', i);
            if (end == std::string::npos) {
                throw RuleError("rule " + rule_id + ": unterminated '{' in template " + text);
            }
            if (!literal.empty()) {
                tpl.pieces.push_back({false, literal});
                literal.clear();
            }
            std::string field = body.substr(i + 1, end - i - 1);
            if (field.empty()) {
                throw RuleError("rule " + rule_id + ": empty placeholder in template " + text);
            }
            tpl.pieces.push_back({true, field});
            i = end;
        } else {
            literal += body[i];
        }
    }
    if (!literal.empty()) tpl.pieces.push_back({false, literal});
    if (tpl.pieces.empty()) {
        throw RuleError("rule " + rule_id + ": empty template");
    }
    return tpl;
}

std::string resolve_curie(const vocab::Vocabulary& vocab, const std::string& curie,
                          const std::string& rule_id) {
    try {
        return vocab.expand(curie).value();
    } catch (const VocabError& e) {
        throw RuleError("rule " + rule_id + ": " + e.what());
    }
}

void check_fields(const IriTemplate& tpl, const std::vector<std::string>& schema,
                  const std::string& rule_id) {
    for (const auto& field : tpl.field_names()) {
        if (std::find(schema.begin(), schema.end(), field) == schema.end()) {
            throw RuleError("rule " + rule_id + ": unknown field {" + field + "}");
        }
    }
}

std::optional<std::string> expand_template(const IriTemplate& tpl, const ingest::Record& record,
                                           const vocab::IriMinter& minter,
                                           std::string* missing_field) {
    std::string path;
    for (const auto& piece : tpl.pieces) {
        if (piece.is_field) {
            auto value = record.get(piece.text);
            if (!value) {
                if (missing_field) *missing_field = piece.text;
                return std::nullopt;
            }
            path += vocab::IriMinter::encode_value(*value);
        } else {
            path += piece.text;
        }
    }
    if (tpl.absolute) return path;
    return minter.data_root() + path;
}

}  // namespace

std::vector<std::string> IriTemplate::field_names() const {
    std::vector<std::string> out;
    for (const auto& piece : pieces) {
        if (piece.is_field) out.push_back(piece.text);
    }
    return out;
}

RuleSet compile_rules(std::string_view text, const vocab::Vocabulary& vocab) {
    RuleSet set;
    std::set<std::string> ids;
    std::optional<MappingRule> current;
    std::map<std::string, IriTemplate> po_templates;  // parsed alongside po maps

    std::istringstream stream{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0];

        if (keyword == "rule") {
            if (current) throw RuleError("rule " + current->id + ": missing 'end'");
            if (tokens.size() != 2) throw RuleError("line " + std::to_string(line_no) +
                                                    ": 'rule' takes exactly one id");
            if (!ids.insert(tokens[1]).second) {
                throw RuleError("duplicate rule id: " + tokens[1]);
            }
            current = MappingRule{};
            current->id = tokens[1];
            continue;
        }
        if (!current) {
            throw RuleError("line " + std::to_string(line_no) + ": '" + keyword +
                            "' outside a rule block");
        }
        if (keyword == "from") {
            if (tokens.size() != 2) throw RuleError("rule " + current->id + ": bad 'from'");
            if (!ingest::record_schemas().count(tokens[1])) {
                throw RuleError("rule " + current->id + ": unknown record kind " + tokens[1]);
            }
            current->record_kind = tokens[1];
        } else if (keyword == "graph") {
            if (tokens.size() != 2) throw RuleError("rule " + current->id + ": bad 'graph'");
            current->graph_name = tokens[1];
        } else if (keyword == "subject") {
            if (tokens.size() != 2) throw RuleError("rule " + current->id + ": bad 'subject'");
            current->subject = parse_template(tokens[1], current->id);
        } else if (keyword == "type") {
            if (tokens.size() < 2) throw RuleError("rule " + current->id + ": bad 'type'");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                current->type_iris.push_back(resolve_curie(vocab, tokens[i], current->id));
            }
        } else if (keyword == "po") {
            if (tokens.size() < 3) throw RuleError("rule " + current->id + ": bad 'po'");
            PredicateObjectMap po;
            po.predicate_iri = resolve_curie(vocab, tokens[1], current->id);
            const std::string& form = tokens[2];
            if (form == "literal") {
                if (tokens.size() < 4 || tokens[3].front() != '{' || tokens[3].back() != '}') {
                    throw RuleError("rule " + current->id + ": 'literal' needs a {field}");
                }
                po.object.kind = ObjectSpec::Kind::FieldLiteral;
                po.object.field = tokens[3].substr(1, tokens[3].size() - 2);
                if (tokens.size() == 5) {
                    const std::string& mod = tokens[4];
                    if (mod.rfind("^^", 0) == 0) {
                        po.object.datatype_iri = resolve_curie(vocab, mod.substr(2), current->id);
                    } else if (mod.rfind('@', 0) == 0) {
                        po.object.language = mod.substr(1);
                    } else {
                        throw RuleError("rule " + current->id + ": bad literal modifier " + mod);
                    }
                } else if (tokens.size() > 5) {
                    throw RuleError("rule " + current->id + ": too many tokens in 'po'");
                }
            } else if (form == "iri") {
                if (tokens.size() != 4) {
                    throw RuleError("rule " + current->id + ": 'iri' needs a template");
                }
                po.object.kind = ObjectSpec::Kind::FieldIri;
                po.object.iri_template = parse_template(tokens[3], current->id);
            } else if (form == "const") {
                if (tokens.size() != 4) {
                    throw RuleError("rule " + current->id + ": 'const' needs one value");
                }
                po.object.kind = ObjectSpec::Kind::Constant;
                const std::string& value = tokens[3];
                if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
                    po.object.constant = rdf::Term::literal(value.substr(1, value.size() - 2));
                } else if (value.size() >= 2 && value.front() == '<' && value.back() == '>') {
                    po.object.constant = rdf::Term::iri(value.substr(1, value.size() - 2));
                } else {
                    po.object.constant =
                        rdf::Term::iri(resolve_curie(vocab, value, current->id));
                }
            } else {
                throw RuleError("rule " + current->id + ": unknown object form " + form);
            }
            current->po_maps.push_back(std::move(po));
        } else if (keyword == "end") {
            if (current->record_kind.empty() || current->graph_name.empty() ||
                current->subject.pieces.empty()) {
                throw RuleError("rule " + current->id +
                                ": needs 'from', 'graph' and 'subject' before 'end'");
            }
            const auto& schema = ingest::record_schemas().at(current->record_kind);
            check_fields(current->subject, schema, current->id);
            for (const auto& po : current->po_maps) {
                if (po.object.kind == ObjectSpec::Kind::FieldLiteral) {
                    if (std::find(schema.begin(), schema.end(), po.object.field) ==
                        schema.end()) {
                        throw RuleError("rule " + current->id + ": unknown field {" +
                                        po.object.field + "}");
                    }
                } else if (po.object.kind == ObjectSpec::Kind::FieldIri) {
                    check_fields(po.object.iri_template, schema, current->id);
                }
            }
            set.rules.push_back(std::move(*current));
            current.reset();
        } else {
            throw RuleError("line " + std::to_string(line_no) + ": unknown keyword '" +
                            keyword + "'");
        }
    }
    if (current) throw RuleError("rule " + current->id + ": missing 'end'");
    return set;
}

std::vector<rdf::Quad> apply(const RuleSet& rules, std::span<const ingest::Record> records,
                             const vocab::Vocabulary& vocab, ingest::WarningLog& log) {
    const rdf::Term type_pred = rdf::Term::iri(std::string(rdf::iri::rdf_type));
    std::vector<rdf::Quad> out;
    std::set<std::string> seen;

    auto push = [&](rdf::Quad q) {
        if (seen.insert(q.key()).second) out.push_back(std::move(q));
    };

    for (const MappingRule& rule : rules.rules) {
        rdf::Term graph = vocab.minter().graph(rule.graph_name);
        for (const ingest::Record& record : records) {
            if (record.kind != rule.record_kind) continue;
            std::string missing;
            auto subject_iri = expand_template(rule.subject, record, vocab.minter(), &missing);
            if (!subject_iri) {
                log.add(record.kind, record.locator,
                        "rule " + rule.id + ": subject field {" + missing + "} absent");
                continue;
            }
            if (!rdf::has_iri_scheme(*subject_iri)) {
                log.add(record.kind, record.locator,
                        "rule " + rule.id + ": subject is not an absolute IRI: " + *subject_iri);
                continue;
            }
            rdf::Term subject = rdf::Term::iri(*subject_iri);
            for (const auto& type_iri : rule.type_iris) {
                push(rdf::Quad(subject, type_pred, rdf::Term::iri(type_iri), graph));
            }
            for (const auto& po : rule.po_maps) {
                rdf::Term predicate = rdf::Term::iri(po.predicate_iri);
                switch (po.object.kind) {
                    case ObjectSpec::Kind::FieldLiteral: {
                        auto value = record.get(po.object.field);
                        if (!value) break;  // absent optional field: emit nothing
                        rdf::Term object =
                            !po.object.language.empty()
                                ? rdf::Term::lang_literal(*value, po.object.language)
                                : rdf::Term::literal(*value, po.object.datatype_iri);
                        push(rdf::Quad(subject, predicate, object, graph));
                        break;
                    }
                    case ObjectSpec::Kind::FieldIri: {
                        auto iri =
                            expand_template(po.object.iri_template, record, vocab.minter(),
                                            nullptr);
                        if (!iri) break;
                        if (!rdf::has_iri_scheme(*iri)) {
                            log.add(record.kind, record.locator,
                                    "rule " + rule.id + ": object is not an absolute IRI: " +
                                        *iri);
                            break;
                        }
                        push(rdf::Quad(subject, predicate, rdf::Term::iri(*iri), graph));
                        break;
                    }
                    case ObjectSpec::Kind::Constant:
                        push(rdf::Quad(subject, predicate, *po.object.constant, graph));
                        break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const rdf::Quad& a, const rdf::Quad& b) { return a.key() < b.key(); });
    return out;
}

}  // namespace ccskg::mapping
