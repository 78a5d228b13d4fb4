#include "value_compare.hpp"

#include <algorithm>
#include <cctype>

namespace ccskg::query::detail {

namespace {

struct Decimal {
    bool negative = false;
    std::string integer;   // no leading zeros (may be empty for 0)
    std::string fraction;  // no trailing zeros
};

std::optional<Decimal> parse_decimal(std::string_view s) {
    Decimal d;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        d.negative = s[i] == '-';
        ++i;
    }
    bool any_digit = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        d.integer += s[i++];
        any_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            d.fraction += s[i++];
            any_digit = true;
        }
    }
    if (!any_digit || i != s.size()) return std::nullopt;
    d.integer.erase(0, std::min(d.integer.find_first_not_of('0'), d.integer.size()));
    while (!d.fraction.empty() && d.fraction.back() == '0') d.fraction.pop_back();
    if (d.integer.empty() && d.fraction.empty()) d.negative = false;  // -0 == 0
    return d;
}

int compare_magnitude(const Decimal& a, const Decimal& b) {
    if (a.integer.size() != b.integer.size()) {
        return a.integer.size() < b.integer.size() ? -1 : 1;
    }
    if (int c = a.integer.compare(b.integer); c != 0) return c < 0 ? -1 : 1;
    // Same integer part: compare fractions digit by digit.
    std::size_t n = std::max(a.fraction.size(), b.fraction.size());
    for (std::size_t i = 0; i < n; ++i) {
        char da = i < a.fraction.size() ? a.fraction[i] : '0';
        char db = i < b.fraction.size() ? b.fraction[i] : '0';
        if (da != db) return da < db ? -1 : 1;
    }
    return 0;
}

}  // namespace

std::optional<int> compare_decimal(std::string_view a, std::string_view b) {
    auto da = parse_decimal(a);
    auto db = parse_decimal(b);
    if (!da || !db) return std::nullopt;
    if (da->negative != db->negative) return da->negative ? -1 : 1;
    int mag = compare_magnitude(*da, *db);
    return da->negative ? -mag : mag;
}

bool is_numeric_datatype(std::string_view datatype) {
    return datatype == rdf::iri::xsd_integer || datatype == rdf::iri::xsd_decimal;
}

std::optional<DurationValue> parse_duration(std::string_view s) {
    DurationValue value;
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && s[i] == '-') {
        negative = true;
        ++i;
    }
    if (i >= s.size() || s[i] != 'P') return std::nullopt;
    ++i;
    bool in_time = false;
    bool any_component = false;
    while (i < s.size()) {
        if (s[i] == 'T') {
            in_time = true;
            ++i;
            continue;
        }
        std::string digits;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
            digits += s[i++];
        }
        if (digits.empty() || i >= s.size()) return std::nullopt;
        char unit = s[i++];
        // Fractions are allowed on seconds only.
        auto dot = digits.find('.');
        if (dot != std::string::npos && !(in_time && unit == 'S')) return std::nullopt;
        long long whole = 0;
        for (std::size_t k = 0; k < (dot == std::string::npos ? digits.size() : dot); ++k) {
            whole = whole * 10 + (digits[k] - '0');
        }
        long long micros_fraction = 0;
        if (dot != std::string::npos) {
            long long scale = 100000;
            for (std::size_t k = dot + 1; k < digits.size() && scale > 0; ++k) {
                micros_fraction += (digits[k] - '0') * scale;
                scale /= 10;
            }
        }
        any_component = true;
        if (!in_time) {
            switch (unit) {
                case 'Y': value.months += whole * 12; break;
                case 'M': value.months += whole; break;
                case 'W': value.micros += whole * 7LL * 86400 * 1000000; break;
                case 'D': value.micros += whole * 86400LL * 1000000; break;
                default: return std::nullopt;
            }
        } else {
            switch (unit) {
                case 'H': value.micros += whole * 3600LL * 1000000; break;
                case 'M': value.micros += whole * 60LL * 1000000; break;
                case 'S': value.micros += whole * 1000000 + micros_fraction; break;
                default: return std::nullopt;
            }
        }
    }
    if (!any_component) return std::nullopt;
    if (negative) {
        value.months = -value.months;
        value.micros = -value.micros;
    }
    return value;
}

namespace {

std::optional<bool> apply_op(CompareOp op, int cmp) {
    switch (op) {
        case CompareOp::Less: return cmp < 0;
        case CompareOp::LessEqual: return cmp <= 0;
        case CompareOp::Equal: return cmp == 0;
        case CompareOp::NotEqual: return cmp != 0;
        case CompareOp::GreaterEqual: return cmp >= 0;
        case CompareOp::Greater: return cmp > 0;
    }
    return std::nullopt;
}

bool equality_op(CompareOp op) {
    return op == CompareOp::Equal || op == CompareOp::NotEqual;
}

}  // namespace

std::optional<bool> filter_compare(CompareOp op, const rdf::Term& a, const rdf::Term& b) {
    using rdf::TermKind;
    if (a.kind() != b.kind()) return std::nullopt;

    if (a.kind() == TermKind::Iri || a.kind() == TermKind::BlankNode) {
        if (!equality_op(op)) return std::nullopt;
        return apply_op(op, a == b ? 0 : 1);
    }

    // Literals.
    const bool a_numeric = is_numeric_datatype(a.datatype());
    const bool b_numeric = is_numeric_datatype(b.datatype());
    if (a_numeric && b_numeric) {
        auto cmp = compare_decimal(a.value(), b.value());
        if (!cmp) return std::nullopt;
        return apply_op(op, *cmp);
    }
    if (a_numeric != b_numeric) return std::nullopt;

    if (a.datatype() == rdf::iri::xsd_string && b.datatype() == rdf::iri::xsd_string) {
        return apply_op(op, a.value().compare(b.value()) < 0   ? -1
                            : a.value() == b.value() ? 0
                                                     : 1);
    }

    if (a.datatype() == rdf::iri::xsd_duration && b.datatype() == rdf::iri::xsd_duration) {
        auto da = parse_duration(a.value());
        auto db = parse_duration(b.value());
        if (!da || !db) return std::nullopt;
        // Durations compare only within one base (both month-based or both
        // second-based), and only for equality.
        if (!equality_op(op)) return std::nullopt;
        bool same_base = (da->month_based() && db->month_based()) ||
                         (da->second_based() && db->second_based());
        if (!same_base) return std::nullopt;
        bool equal = da->months == db->months && da->micros == db->micros;
        return apply_op(op, equal ? 0 : 1);
    }

    // Same remaining datatype and language: term equality decides = and !=.
    if (equality_op(op) && a.datatype() == b.datatype() && a.language() == b.language()) {
        return apply_op(op, a == b ? 0 : 1);
    }
    return std::nullopt;
}

int order_compare(const rdf::Term* a, const rdf::Term* b) {
    auto rank = [](const rdf::Term* t) {
        if (!t) return 0;  // unbound first
        switch (t->kind()) {
            case rdf::TermKind::BlankNode: return 1;
            case rdf::TermKind::Iri: return 2;
            case rdf::TermKind::Literal:
                if (is_numeric_datatype(t->datatype())) return 3;
                if (t->datatype() == rdf::iri::xsd_string) return 4;
                return 5;
        }
        return 5;
    };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (!a) return 0;

    auto str_cmp = [](const std::string& x, const std::string& y) {
        return x < y ? -1 : x == y ? 0 : 1;
    };
    switch (ra) {
        case 1:
        case 2:
            return str_cmp(a->value(), b->value());
        case 3: {
            auto cmp = compare_decimal(a->value(), b->value());
            if (cmp && *cmp != 0) return *cmp;
            break;  // equal values (or unparsable): fall through to lexical
        }
        case 4:
        case 5:
        default:
            break;
    }
    if (int c = str_cmp(a->value(), b->value()); c != 0) return c;
    if (int c = str_cmp(a->datatype(), b->datatype()); c != 0) return c;
    return str_cmp(a->language(), b->language());
}

}  // namespace ccskg::query::detail
