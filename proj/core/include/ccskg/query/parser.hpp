#pragma once

#include <string_view>

#include "ccskg/query/ast.hpp"
#include "ccskg/rdf/prefix_map.hpp"

namespace ccskg::query {

// Parses the query subset:
//   PREFIX decls; SELECT [DISTINCT] (?v... | *) WHERE { ... };
//   INSERT { ... } WHERE { ... };
//   triple blocks with ';' and ',' abbreviations and the 'a' keyword;
//   property paths built from iris with '/', '^' and '*';
//   literals with '^^datatype' and '@lang', plus bare integers/decimals;
//   FILTER(expr op expr); ORDER BY ?v...; LIMIT n.
//
// `base_prefixes` seeds the prefix table (the bundled queries rely on the
// registry's prefixes); PREFIX declarations in the text extend or override
// it. Throws ParseError with position on bad syntax or unknown prefixes.
Query parse_query(std::string_view text, const rdf::PrefixMap& base_prefixes);

}  // namespace ccskg::query
