#include "zaremba/resource.hpp"

#include "zaremba/errors.hpp"

#include <cstdlib>
#include <string>

namespace zaremba::resource {

namespace {

std::size_t read_limit() {
    const char* env = std::getenv("ZAREMBA_MAX_MEM");
    if (env == nullptr) {
        return std::size_t{4} << 30;
    }
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) {
        return std::size_t{4} << 30;
    }
    return static_cast<std::size_t>(v);
}

} // namespace

std::size_t limit() {
    static const std::size_t cap = read_limit();
    return cap;
}

void require(std::size_t bytes, const char* what) {
    if (bytes > limit()) {
        throw resource_error(std::string(what) + ": allocation of " +
                             std::to_string(bytes) + " bytes exceeds ZAREMBA_MAX_MEM cap of " +
                             std::to_string(limit()));
    }
}

} // namespace zaremba::resource
