#pragma once

#include <string>
#include <vector>

namespace ccskg::ingest {

// One cleansing-log entry: a record (or row, or facet) that did not make it
// through untouched, plus the reason.
struct Warning {
    std::string source;
    std::string locator;
    std::string reason;

    std::string line() const { return "WARN " + source + " " + locator + " " + reason; }
};

class WarningLog {
public:
    void add(std::string source, std::string locator, std::string reason) {
        entries_.push_back({std::move(source), std::move(locator), std::move(reason)});
    }

    const std::vector<Warning>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::string lines() const {
        std::string out;
        for (const auto& w : entries_) {
            out += w.line();
            out += '\n';
        }
        return out;
    }

private:
    std::vector<Warning> entries_;
};

}  // namespace ccskg::ingest
