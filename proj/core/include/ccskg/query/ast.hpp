#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccskg/rdf/term.hpp"

namespace ccskg::query {

struct Variable {
    std::string name;  // without the leading '?'
    bool operator==(const Variable&) const = default;
};

using Node = std::variant<Variable, rdf::Term>;

// One step of a property path: an optionally inverted predicate with an
// optional zero-or-more closure. A path is a '/'-joined step sequence.
struct PathStep {
    rdf::Term predicate;
    bool inverse = false;
    bool zero_or_more = false;
};

struct Path {
    std::vector<PathStep> steps;
};

struct TriplePattern {
    Node subject;
    Path path;
    Node object;
};

enum class CompareOp { Less, LessEqual, Equal, NotEqual, GreaterEqual, Greater };

using Operand = std::variant<Variable, rdf::Term>;

struct Filter {
    CompareOp op;
    Operand lhs;
    Operand rhs;
};

struct WhereClause {
    std::vector<TriplePattern> patterns;  // join order = textual order
    std::vector<Filter> filters;          // applied after the pattern join
};

struct SelectQuery {
    bool distinct = false;
    std::vector<Variable> projection;  // empty means '*'
    WhereClause where;
    std::vector<Variable> order_by;
    std::optional<std::size_t> limit;
    // e.g. a projected variable never bound in WHERE — legal, but suspicious.
    std::vector<std::string> warnings;
};

// Template triples instantiated once per WHERE solution.
struct TripleTemplate {
    Node subject;
    Node predicate;
    Node object;
};

struct InsertQuery {
    std::vector<TripleTemplate> templates;
    WhereClause where;
};

using Query = std::variant<SelectQuery, InsertQuery>;

}  // namespace ccskg::query
