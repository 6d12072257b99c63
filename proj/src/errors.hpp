#pragma once

#include <stdexcept>
#include <string>

namespace linklab {

// Input outside a function's documented domain (negative SNR, bad parameter set).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A Meijer-G parameter set for which no convergent evaluation strategy exists,
// or whose series exceeds the per-pole term cap.
struct unsupported_instance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric procedure failed to reach its accuracy contract (integrator
// non-convergence, shift-consistency breakdown).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config-document rejection; carries the offending key and 1-based line
// number when they could be located (0 = unknown line).
struct parse_error : std::runtime_error {
    std::string key;
    int line = 0;
    parse_error(const std::string& msg, std::string k = {}, int ln = 0)
        : std::runtime_error(msg), key(std::move(k)), line(ln) {}
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace linklab
