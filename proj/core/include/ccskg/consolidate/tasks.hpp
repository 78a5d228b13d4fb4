#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccskg/query/ast.hpp"
#include "ccskg/rdf/graph_store.hpp"
#include "ccskg/vocab/vocabulary.hpp"

namespace ccskg::consolidate {

// A post-mapping enrichment step. Most tasks are INSERT-WHERE statements
// run in file order against the union view; a few need aggregation the
// pattern language cannot express (universal quantification) and are
// named builtins instead.
//
// Task file grammar ('#' comments):
//   task <id>
//   INSERT { ... } WHERE { ... }      (one or more)
// or
//   task <id>
//   builtin <name>
struct ConsolidationTask {
    std::string id;
    std::vector<query::InsertQuery> statements;
    std::optional<std::string> builtin;
};

struct TaskReport {
    std::string id;
    std::size_t inserted = 0;

    std::string line() const { return "TASK " + id + " inserted=" + std::to_string(inserted); }
};

ConsolidationTask parse_task(std::string_view text, const vocab::Vocabulary& vocab);

// Runs one task; insertions go to `target_graph` with set semantics, so an
// immediate re-run inserts zero quads.
TaskReport run_task(rdf::GraphStore& store, const ConsolidationTask& task,
                    const vocab::Vocabulary& vocab, const rdf::Term& target_graph);

// Runs every task in declared order.
std::vector<TaskReport> run_all(rdf::GraphStore& store,
                                std::span<const ConsolidationTask> tasks,
                                const vocab::Vocabulary& vocab,
                                const rdf::Term& target_graph);

// Registered builtin names (currently: finite_variable_tagging, which
// types every dataset whose depended-on axes all carry a discretization as
// a finite variable, superclasses included).
bool is_known_builtin(std::string_view name);

}  // namespace ccskg::consolidate
