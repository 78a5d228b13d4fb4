#include "ccskg/consolidate/tasks.hpp"

#include <cctype>
#include <sstream>

#include "ccskg/error.hpp"
#include "ccskg/query/eval.hpp"
#include "ccskg/query/parser.hpp"

namespace ccskg::consolidate {

namespace {

std::string strip_comments(std::string_view text) {
    std::string out;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '"') in_string = !in_string;
        if (c == '#' && !in_string) {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i < text.size()) out += '\n';
            continue;
        }
        out += c;
    }
    return out;
}

bool word_at(const std::string& text, std::size_t pos, std::string_view word) {
    if (text.compare(pos, word.size(), word) != 0) return false;
    bool start_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    std::size_t end = pos + word.size();
    bool end_ok = end >= text.size() || !std::isalnum(static_cast<unsigned char>(text[end]));
    return start_ok && end_ok;
}

// Splits concatenated INSERT-WHERE statements on top-level INSERT keywords.
std::vector<std::string> split_statements(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    bool in_string = false;
    std::size_t start = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '"') in_string = !in_string;
        if (in_string) continue;
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (depth == 0 && word_at(text, i, "INSERT")) {
            if (start != std::string::npos) out.push_back(text.substr(start, i - start));
            start = i;
        }
    }
    if (start != std::string::npos) out.push_back(text.substr(start));
    return out;
}

std::size_t builtin_finite_variable_tagging(rdf::GraphStore& store,
                                            const vocab::Vocabulary& vocab,
                                            const rdf::Term& target_graph) {
    const rdf::Term type_pred = rdf::Term::iri(std::string(rdf::iri::rdf_type));
    const rdf::Term dataset_class = vocab.expand("data:Dataset");
    const rdf::Term finite_class = vocab.expand("data:FiniteVariable");
    const rdf::Term depends_on = vocab.expand("data:dependsOnVariable");
    const rdf::Term has_discretization = vocab.expand("data:hasDiscretization");

    std::size_t inserted = 0;
    for (const auto& triple : store.match_triples(std::nullopt, type_pred, dataset_class)) {
        const rdf::Term& node = triple[0];
        bool all_discretized = true;
        for (const auto& dep : store.match_triples(node, depends_on, std::nullopt)) {
            if (store.match_triples(dep[2], has_discretization, std::nullopt).empty()) {
                all_discretized = false;
                break;
            }
        }
        if (!all_discretized) continue;
        // Insert the class and its superclasses so the hierarchy pass never
        // has to revisit these nodes.
        if (store.insert(rdf::Quad(node, type_pred, finite_class, target_graph))) ++inserted;
        for (const auto& super : vocab.super_closure(finite_class.value())) {
            if (store.insert(rdf::Quad(node, type_pred, rdf::Term::iri(super), target_graph))) {
                ++inserted;
            }
        }
    }
    return inserted;
}

}  // namespace

bool is_known_builtin(std::string_view name) {
    return name == "finite_variable_tagging";
}

ConsolidationTask parse_task(std::string_view text, const vocab::Vocabulary& vocab) {
    std::string clean = strip_comments(text);

    // First meaningful line: "task <id>".
    std::istringstream stream(clean);
    std::string line;
    ConsolidationTask task;
    std::size_t consumed = 0;
    while (std::getline(stream, line)) {
        consumed += line.size() + 1;
        std::istringstream words(line);
        std::string keyword;
        if (!(words >> keyword)) continue;
        if (keyword != "task") {
            throw ConfigError("task file must start with 'task <id>', got: " + line);
        }
        if (!(words >> task.id) || task.id.empty()) {
            throw ConfigError("task line is missing an id");
        }
        break;
    }
    if (task.id.empty()) throw ConfigError("empty task file");

    std::string rest = clean.substr(std::min(consumed, clean.size()));

    // Either a builtin reference or one or more INSERT-WHERE statements.
    std::istringstream rest_stream(rest);
    std::string first_word;
    rest_stream >> first_word;
    if (first_word == "builtin") {
        std::string name;
        rest_stream >> name;
        if (!is_known_builtin(name)) {
            throw ConfigError("task " + task.id + ": unknown builtin '" + name + "'");
        }
        task.builtin = name;
        return task;
    }

    for (const std::string& statement : split_statements(rest)) {
        query::Query parsed = query::parse_query(statement, vocab.prefixes());
        auto* insert = std::get_if<query::InsertQuery>(&parsed);
        if (!insert) {
            throw ConfigError("task " + task.id + ": only INSERT-WHERE statements are allowed");
        }
        task.statements.push_back(std::move(*insert));
    }
    if (task.statements.empty()) {
        throw ConfigError("task " + task.id + ": no statements");
    }
    return task;
}

TaskReport run_task(rdf::GraphStore& store, const ConsolidationTask& task,
                    const vocab::Vocabulary& vocab, const rdf::Term& target_graph) {
    TaskReport report{task.id, 0};
    if (task.builtin) {
        if (*task.builtin == "finite_variable_tagging") {
            report.inserted = builtin_finite_variable_tagging(store, vocab, target_graph);
        }
        return report;
    }
    for (const query::InsertQuery& statement : task.statements) {
        report.inserted += query::evaluate_insert(store, statement, target_graph);
    }
    return report;
}

std::vector<TaskReport> run_all(rdf::GraphStore& store,
                                std::span<const ConsolidationTask> tasks,
                                const vocab::Vocabulary& vocab,
                                const rdf::Term& target_graph) {
    std::vector<TaskReport> reports;
    reports.reserve(tasks.size());
    for (const ConsolidationTask& task : tasks) {
        reports.push_back(run_task(store, task, vocab, target_graph));
    }
    return reports;
}

}  // namespace ccskg::consolidate
