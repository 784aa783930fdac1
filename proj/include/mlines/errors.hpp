#pragma once

#include <stdexcept>

namespace mlines {

// Malformed input (file formats, encodings).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds a configured enumeration or size ceiling.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mlines
