#pragma once

#include <cstddef>

namespace zaremba::resource {

// Allocation cap in bytes. Read once from ZAREMBA_MAX_MEM (plain byte count);
// defaults to 4 GiB when unset or unparsable.
std::size_t limit();

// Throws resource_error if a single allocation of `bytes` would exceed the cap.
void require(std::size_t bytes, const char* what);

} // namespace zaremba::resource
