#pragma once

#include <string>
#include <vector>

namespace linklab::errata {

// One printed-equation discrepancy: which equation, at which configuration,
// closed-form value vs oracle value, and the absolute gap.
struct Entry {
    std::string equation;     // e.g. "eq22"
    std::string fingerprint;  // compact cfg description, no spaces
    double closed = 0.0;
    double oracle = 0.0;
    double gap = 0.0;
    std::string note;
};

// Registry is process-wide and thread-safe; entries are deduplicated on
// (equation, fingerprint) and appended to the log file as they arrive.
void set_path(const std::string& path);
std::string path();
void record(const Entry& e);
std::vector<Entry> entries();
std::string render();

}  // namespace linklab::errata
