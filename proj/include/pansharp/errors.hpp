#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pansharp {

// Error classes map 1:1 onto CLI exit codes, so keep them distinct:
// invalid arguments use std::invalid_argument directly.

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed image bytes; carries the byte offset where parsing failed.
struct format_error : std::runtime_error {
    // Marks a message that already carries the byte-offset suffix (rethrows).
    struct raw_tag {};

    format_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    format_error(raw_tag, const std::string& full_message, std::size_t byte_offset)
        : std::runtime_error(full_message), offset(byte_offset) {}

    std::size_t offset;
};

// Sample values outside the domain of an operation (NaN, negatives under sqrt, ...).
struct invalid_data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Statistics that do not exist for the given input (zero variance, empty support).
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pansharp
