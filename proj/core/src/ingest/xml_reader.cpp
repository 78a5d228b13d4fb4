#include "xml_reader.hpp"

#include <cctype>

#include "ccskg/error.hpp"

namespace ccskg::ingest::detail {

const XmlElement* XmlElement::first_child(std::string_view child_name) const {
    for (const auto& child : children) {
        if (child->name == child_name) return child.get();
    }
    return nullptr;
}

std::string XmlElement::child_text(std::string_view child_name) const {
    const XmlElement* child = first_child(child_name);
    return child ? child->text : std::string();
}

namespace {

class XmlScanner {
public:
    explicit XmlScanner(std::string_view input) : input_(input) {}

    std::unique_ptr<XmlElement> parse_document() {
        skip_misc();
        if (eof()) fail("empty XML document");
        auto root = parse_element();
        skip_misc();
        if (!eof()) fail("content after root element");
        return root;
    }

private:
    bool eof() const { return pos_ >= input_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < input_.size() ? input_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = input_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    bool starts_with(std::string_view s) const {
        return input_.compare(pos_, s.size(), s) == 0;
    }
    void consume(std::string_view s) {
        for (std::size_t i = 0; i < s.size(); ++i) advance();
    }

    void skip_whitespace() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    // Whitespace, XML declaration, processing instructions, comments.
    void skip_misc() {
        while (true) {
            skip_whitespace();
            if (starts_with("<?")) {
                while (!eof() && !starts_with("?>")) advance();
                if (eof()) fail("unterminated processing instruction");
                consume("?>");
            } else if (starts_with("<!--")) {
                consume("<!--");
                while (!eof() && !starts_with("-->")) advance();
                if (eof()) fail("unterminated comment");
                consume("-->");
            } else {
                break;
            }
        }
    }

    std::string read_name() {
        std::string out;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                c == ':' || c == '.') {
                out += advance();
            } else {
                break;
            }
        }
        if (out.empty()) fail("expected XML name");
        return out;
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            auto end = raw.find(';', i);
            if (end == std::string_view::npos) fail("unterminated entity reference");
            std::string_view entity = raw.substr(i + 1, end - i - 1);
            if (entity == "amp") {
                out += '&';
            } else if (entity == "lt") {
                out += '<';
            } else if (entity == "gt") {
                out += '>';
            } else if (entity == "quot") {
                out += '"';
            } else if (entity == "apos") {
                out += '\'';
            } else if (!entity.empty() && entity[0] == '#') {
                unsigned long cp = 0;
                if (entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X')) {
                    cp = std::stoul(std::string(entity.substr(2)), nullptr, 16);
                } else {
                    cp = std::stoul(std::string(entity.substr(1)), nullptr, 10);
                }
                // UTF-8 encode
                if (cp <= 0x7F) {
                    out += static_cast<char>(cp);
                } else if (cp <= 0x7FF) {
                    out += static_cast<char>(0xC0 | (cp >> 6));
                    out += static_cast<char>(0x80 | (cp & 0x3F));
                } else if (cp <= 0xFFFF) {
                    out += static_cast<char>(0xE0 | (cp >> 12));
                    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
                    out += static_cast<char>(0x80 | (cp & 0x3F));
                } else {
                    out += static_cast<char>(0xF0 | (cp >> 18));
                    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
                    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
                    out += static_cast<char>(0x80 | (cp & 0x3F));
                }
            } else {
                fail("unknown entity reference: &" + std::string(entity) + ";");
            }
            i = end;
        }
        return out;
    }

    std::string read_attribute_value() {
        char quote = peek();
        if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
        advance();
        std::string raw;
        while (!eof() && peek() != quote) raw += advance();
        if (eof()) fail("unterminated attribute value");
        advance();
        return decode_entities(raw);
    }

    std::unique_ptr<XmlElement> parse_element() {
        if (peek() != '<') fail("expected '<'");
        advance();
        auto element = std::make_unique<XmlElement>();
        element->name = read_name();

        while (true) {
            skip_whitespace();
            if (starts_with("/>")) {
                consume("/>");
                return element;
            }
            if (peek() == '>') {
                advance();
                break;
            }
            std::string attr = read_name();
            skip_whitespace();
            if (peek() != '=') fail("expected '=' after attribute name");
            advance();
            skip_whitespace();
            element->attributes[attr] = read_attribute_value();
        }

        // Content: character data, children, comments, until the close tag.
        std::string raw_text;
        while (true) {
            if (eof()) fail("unterminated element: " + element->name);
            if (starts_with("<!--")) {
                consume("<!--");
                while (!eof() && !starts_with("-->")) advance();
                if (eof()) fail("unterminated comment");
                consume("-->");
            } else if (starts_with("</")) {
                consume("</");
                std::string closing = read_name();
                if (closing != element->name) {
                    fail("mismatched close tag: expected </" + element->name + ">, got </" +
                         closing + ">");
                }
                skip_whitespace();
                if (peek() != '>') fail("expected '>' in close tag");
                advance();
                break;
            } else if (peek() == '<') {
                element->children.push_back(parse_element());
            } else {
                raw_text += advance();
            }
        }
        element->text = decode_entities(raw_text);
        return element;
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

std::unique_ptr<XmlElement> parse_xml(std::string_view text) {
    return XmlScanner(text).parse_document();
}

}  // namespace ccskg::ingest::detail
