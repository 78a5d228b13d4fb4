#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ccskg::ingest::detail {

// Minimal XML document reader covering the fixed table formats ingested
// here: elements, attributes, character data with entity references,
// comments, and processing instructions. No namespaces, no CDATA, no DTDs.
struct XmlElement {
    std::string name;
    std::map<std::string, std::string> attributes;
    std::vector<std::unique_ptr<XmlElement>> children;
    std::string text;  // concatenated character data of this element

    const XmlElement* first_child(std::string_view child_name) const;
    std::string child_text(std::string_view child_name) const;
};

// Parses a whole document and returns the root element. Throws ParseError
// with line/column on malformed input.
std::unique_ptr<XmlElement> parse_xml(std::string_view text);

}  // namespace ccskg::ingest::detail
