#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ccskg/query/ast.hpp"
#include "ccskg/rdf/term.hpp"

namespace ccskg::query::detail {

// Exact comparison of two decimal lexical forms (sign, digits, optional
// fraction): -1, 0, +1. No floating point involved, so 0.11 < 0.2 holds
// even though the strings compare the other way. Returns nullopt when
// either form is not a plain decimal.
std::optional<int> compare_decimal(std::string_view a, std::string_view b);

bool is_numeric_datatype(std::string_view datatype);

// ISO-8601 duration split into its two value-space components.
struct DurationValue {
    long long months = 0;
    // Seconds scaled by 1e6 so fractional seconds stay exact.
    long long micros = 0;

    bool month_based() const { return micros == 0; }
    bool second_based() const { return months == 0; }
};

std::optional<DurationValue> parse_duration(std::string_view lexical);

// FILTER comparison. Returns nullopt when the operands do not compare
// (incompatible value types); such solutions are eliminated.
std::optional<bool> filter_compare(CompareOp op, const rdf::Term& a, const rdf::Term& b);

// Total order for ORDER BY: -1, 0, +1 over optional terms, with
// unbound < blank < IRI < literal and the literal subordering
// numeric-by-value, string-by-codepoint, then others by lexical form.
int order_compare(const rdf::Term* a, const rdf::Term* b);

}  // namespace ccskg::query::detail
