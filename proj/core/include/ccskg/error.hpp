#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccskg {

// Base for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed RDF term or quad (relative IRI, literal subject, ...).
class ModelError : public Error {
public:
    using Error::Error;
};

// Syntax error in a textual input, with 1-based line/column.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Unknown prefix, unregistered term, or an ill-formed curie.
class VocabError : public Error {
public:
    using Error::Error;
};

// File or configuration problem in the pipeline layer.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Raised by the isomorphism checker when the blank-node count exceeds the
// brute-force limit.
class UndecidableError : public Error {
public:
    using Error::Error;
};

}  // namespace ccskg
