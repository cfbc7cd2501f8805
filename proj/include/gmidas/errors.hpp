#pragma once

#include <stdexcept>
#include <string>

namespace gmidas {

// Unreadable or malformed input files.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite intermediates, failed decompositions, and similar numeric trouble.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gmidas
