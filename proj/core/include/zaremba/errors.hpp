#pragma once

#include <stdexcept>
#include <string>

namespace zaremba {

// Thrown when a requested table or series would exceed the configured
// allocation cap (see resource.hpp). Never silently truncates.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zaremba
