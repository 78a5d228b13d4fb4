#include "ccskg/query/eval.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "value_compare.hpp"

namespace ccskg::query {

using rdf::Term;
using rdf::Triple;

namespace {

// Union-view adjacency for one evaluation: per-predicate edges plus the
// node universe (every term occurring in any triple position, first-seen
// order).
class TripleView {
public:
    explicit TripleView(const rdf::GraphStore& store) {
        for (const Triple& t : store.triples()) {
            edges_[t[1].ntriples()].emplace_back(t[0], t[2]);
            note(t[0]);
            note(t[1]);
            note(t[2]);
        }
    }

    const std::vector<std::pair<Term, Term>>& edges(const Term& predicate) const {
        static const std::vector<std::pair<Term, Term>> empty;
        auto it = edges_.find(predicate.ntriples());
        return it == edges_.end() ? empty : it->second;
    }

    const std::vector<Term>& universe() const { return universe_; }

private:
    void note(const Term& t) {
        if (seen_.insert(t.ntriples()).second) universe_.push_back(t);
    }

    std::unordered_map<std::string, std::vector<std::pair<Term, Term>>> edges_;
    std::unordered_set<std::string> seen_;
    std::vector<Term> universe_;
};

// One-step image of `node` under a (possibly inverted) predicate.
std::vector<Term> step_image(const TripleView& view, const PathStep& step, const Term& node) {
    std::vector<Term> out;
    for (const auto& [s, o] : view.edges(step.predicate)) {
        const Term& from = step.inverse ? o : s;
        const Term& to = step.inverse ? s : o;
        if (from == node) out.push_back(to);
    }
    return out;
}

// Reflexive-transitive closure from `start` (BFS; start always included,
// so every node reaches itself by a length-0 path). Duplicate-free.
std::vector<Term> closure_image(const TripleView& view, const PathStep& step,
                                const Term& start) {
    std::vector<Term> out;
    std::unordered_set<std::string> seen;
    std::deque<Term> frontier{start};
    seen.insert(start.ntriples());
    while (!frontier.empty()) {
        Term node = frontier.front();
        frontier.pop_front();
        out.push_back(node);
        for (Term& next : step_image(view, step, node)) {
            if (seen.insert(next.ntriples()).second) frontier.push_back(std::move(next));
        }
    }
    return out;
}

// All nodes reached from `start` along the whole path.
std::vector<Term> path_image(const TripleView& view, const Path& path, const Term& start) {
    std::vector<Term> frontier{start};
    for (const PathStep& step : path.steps) {
        std::vector<Term> next;
        std::unordered_set<std::string> seen;
        for (const Term& node : frontier) {
            auto image = step.zero_or_more ? closure_image(view, step, node)
                                           : step_image(view, step, node);
            for (Term& t : image) {
                if (seen.insert(t.ntriples()).second) next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

// Start candidates for a path whose subject is unbound: every node when the
// first step has a zero-or-more closure (length-0 paths hold anywhere),
// otherwise the sources of the first step's edges.
std::vector<Term> start_candidates(const TripleView& view, const Path& path) {
    const PathStep& first = path.steps.front();
    if (first.zero_or_more) return view.universe();
    std::vector<Term> out;
    std::unordered_set<std::string> seen;
    for (const auto& [s, o] : view.edges(first.predicate)) {
        const Term& from = first.inverse ? o : s;
        if (seen.insert(from.ntriples()).second) out.push_back(from);
    }
    return out;
}

using Row = std::vector<const Term*>;  // by variable id; null = unbound

class Evaluator {
public:
    Evaluator(const rdf::GraphStore& store, const WhereClause& where) : view_(store) {
        collect_vars(where);
    }

    const std::vector<std::string>& var_names() const { return var_names_; }

    // Joined and filtered solutions; terms owned by arena_.
    std::vector<std::vector<const Term*>> solve(const WhereClause& where) {
        std::vector<Row> rows{Row(var_names_.size(), nullptr)};
        for (const TriplePattern& pattern : where.patterns) {
            rows = extend(rows, pattern);
            if (rows.empty()) break;
        }
        if (!rows.empty()) {
            for (const Filter& filter : where.filters) {
                std::vector<Row> kept;
                for (Row& row : rows) {
                    if (passes(filter, row)) kept.push_back(std::move(row));
                }
                rows = std::move(kept);
            }
        }
        return rows;
    }

    int var_id(const std::string& name) const {
        auto it = var_ids_.find(name);
        return it == var_ids_.end() ? -1 : it->second;
    }

private:
    void collect_vars(const WhereClause& where) {
        auto note = [&](const Node& node) {
            if (auto* v = std::get_if<Variable>(&node)) {
                if (!var_ids_.count(v->name)) {
                    var_ids_[v->name] = static_cast<int>(var_names_.size());
                    var_names_.push_back(v->name);
                }
            }
        };
        for (const TriplePattern& p : where.patterns) {
            note(p.subject);
            note(p.object);
        }
    }

    const Term* intern(const Term& t) {
        arena_.push_back(std::make_unique<Term>(t));
        return arena_.back().get();
    }

    std::vector<Row> extend(const std::vector<Row>& rows, const TriplePattern& pattern) {
        std::vector<Row> out;
        for (const Row& row : rows) {
            const Term* subject = resolve(pattern.subject, row);
            const Term* object = resolve(pattern.object, row);

            std::vector<std::pair<Term, Term>> pairs;
            if (subject) {
                for (Term& target : path_image(view_, pattern.path, *subject)) {
                    if (!object || target == *object) pairs.emplace_back(*subject, target);
                }
            } else {
                for (const Term& start : start_candidates(view_, pattern.path)) {
                    for (Term& target : path_image(view_, pattern.path, start)) {
                        if (!object || target == *object) pairs.emplace_back(start, target);
                    }
                }
            }

            for (auto& [s, o] : pairs) {
                Row next = row;
                if (!bind(next, pattern.subject, s)) continue;
                if (!bind(next, pattern.object, o)) continue;
                out.push_back(std::move(next));
            }
        }
        return out;
    }

    const Term* resolve(const Node& node, const Row& row) const {
        if (auto* t = std::get_if<Term>(&node)) return t;
        const auto& v = std::get<Variable>(node);
        return row[var_ids_.at(v.name)];
    }

    bool bind(Row& row, const Node& node, const Term& value) {
        auto* v = std::get_if<Variable>(&node);
        if (!v) return true;  // concrete endpoint already matched
        const Term*& slot = row[var_ids_.at(v->name)];
        if (slot) return *slot == value;
        slot = intern(value);
        return true;
    }

    bool passes(const Filter& filter, const Row& row) const {
        auto operand = [&](const Operand& op) -> const Term* {
            if (auto* t = std::get_if<Term>(&op)) return t;
            const auto& v = std::get<Variable>(op);
            auto it = var_ids_.find(v.name);
            return it == var_ids_.end() ? nullptr : row[it->second];
        };
        const Term* lhs = operand(filter.lhs);
        const Term* rhs = operand(filter.rhs);
        if (!lhs || !rhs) return false;  // unbound operand eliminates
        auto verdict = detail::filter_compare(filter.op, *lhs, *rhs);
        return verdict.value_or(false);
    }

    TripleView view_;
    std::map<std::string, int> var_ids_;
    std::vector<std::string> var_names_;
    std::vector<std::unique_ptr<Term>> arena_;
};

std::string row_fingerprint(const Binding& row) {
    std::string out;
    for (const auto& [name, term] : row) {
        out += name;
        out += '=';
        out += term.ntriples();
        out += '\x1f';
    }
    return out;
}

}  // namespace

Solutions evaluate(const rdf::GraphStore& store, const SelectQuery& query) {
    Evaluator evaluator(store, query.where);
    auto raw = evaluator.solve(query.where);

    // ORDER BY precedes projection so it may use any in-scope variable.
    if (!query.order_by.empty()) {
        std::vector<int> keys;
        for (const auto& v : query.order_by) keys.push_back(evaluator.var_id(v.name));
        std::stable_sort(raw.begin(), raw.end(), [&](const Row& a, const Row& b) {
            for (int key : keys) {
                const Term* ta = key >= 0 ? a[key] : nullptr;
                const Term* tb = key >= 0 ? b[key] : nullptr;
                if (int c = detail::order_compare(ta, tb); c != 0) return c < 0;
            }
            // Deterministic tie-break over the whole row.
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (int c = detail::order_compare(a[i], b[i]); c != 0) return c < 0;
            }
            return false;
        });
    }

    Solutions out;
    std::vector<int> projected_ids;
    if (query.projection.empty()) {
        out.vars = evaluator.var_names();
        for (int i = 0; i < static_cast<int>(out.vars.size()); ++i) projected_ids.push_back(i);
    } else {
        for (const auto& v : query.projection) {
            out.vars.push_back(v.name);
            projected_ids.push_back(evaluator.var_id(v.name));
        }
    }

    std::set<std::string> seen;
    for (const Row& row : raw) {
        Binding binding;
        for (std::size_t i = 0; i < projected_ids.size(); ++i) {
            int id = projected_ids[i];
            if (id >= 0 && row[id]) binding[out.vars[i]] = *row[id];
        }
        if (query.distinct && !seen.insert(row_fingerprint(binding)).second) continue;
        out.rows.push_back(std::move(binding));
        if (query.limit && out.rows.size() >= *query.limit) break;
    }
    return out;
}

std::size_t evaluate_insert(rdf::GraphStore& store, const InsertQuery& query,
                            const rdf::Term& target_graph, ingest::WarningLog* log) {
    Evaluator evaluator(store, query.where);
    auto raw = evaluator.solve(query.where);

    // Instantiate into a buffer first: the match must not see its own
    // insertions.
    std::vector<rdf::Quad> pending;
    for (const Row& row : raw) {
        auto resolve = [&](const Node& node) -> const Term* {
            if (auto* t = std::get_if<Term>(&node)) return t;
            int id = evaluator.var_id(std::get<Variable>(node).name);
            return id >= 0 ? row[id] : nullptr;
        };
        bool complete = true;
        for (const TripleTemplate& tpl : query.templates) {
            if (!resolve(tpl.subject) || !resolve(tpl.predicate) || !resolve(tpl.object)) {
                complete = false;
                break;
            }
        }
        if (!complete) {
            if (log) log->add("insert", "template", "solution with unbound template variable skipped");
            continue;
        }
        for (const TripleTemplate& tpl : query.templates) {
            try {
                pending.emplace_back(*resolve(tpl.subject), *resolve(tpl.predicate),
                                     *resolve(tpl.object), target_graph);
            } catch (const ModelError& e) {
                if (log) log->add("insert", "template", e.what());
            }
        }
    }

    std::size_t inserted = 0;
    for (rdf::Quad& quad : pending) {
        if (store.insert(std::move(quad))) ++inserted;
    }
    return inserted;
}

std::vector<Term> reachable_zero_or_more(const rdf::GraphStore& store, const Term& start,
                                         const Term& predicate, bool inverse) {
    TripleView view(store);
    PathStep step{predicate, inverse, true};
    return closure_image(view, step, start);
}

}  // namespace ccskg::query
