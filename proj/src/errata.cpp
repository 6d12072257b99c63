#include "errata.hpp"

#include <cstdio>
#include <mutex>
#include <set>

#include "errors.hpp"

namespace linklab::errata {

namespace {
std::mutex g_mu;
std::string g_path = "errata.log";
std::vector<Entry> g_entries;
std::set<std::pair<std::string, std::string>> g_seen;

std::string format_line(const Entry& e) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "equation=%s cfg=%s closed=%.12g oracle=%.12g gap=%.12g note=%s",
                  e.equation.c_str(), e.fingerprint.c_str(), e.closed, e.oracle, e.gap,
                  e.note.empty() ? "-" : e.note.c_str());
    return buf;
}
}  // namespace

void set_path(const std::string& path) {
    std::lock_guard lock(g_mu);
    g_path = path;
}

std::string path() {
    std::lock_guard lock(g_mu);
    return g_path;
}

void record(const Entry& e) {
    std::lock_guard lock(g_mu);
    if (!g_seen.insert({e.equation, e.fingerprint}).second) return;
    g_entries.push_back(e);
    if (FILE* f = std::fopen(g_path.c_str(), "a")) {
        std::fprintf(f, "%s\n", format_line(e).c_str());
        std::fclose(f);
    }
    // an unwritable log is not fatal for the computation itself
}

std::vector<Entry> entries() {
    std::lock_guard lock(g_mu);
    return g_entries;
}

std::string render() {
    std::lock_guard lock(g_mu);
    std::string out;
    for (const auto& e : g_entries) {
        out += format_line(e);
        out += '\n';
    }
    return out;
}

}  // namespace linklab::errata
