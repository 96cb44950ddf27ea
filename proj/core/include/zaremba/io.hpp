#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace zaremba::io {

// Shortest-round-trip-safe text form, 17 significant digits.
std::string format_double(double v);

// Writes text to a sibling temp file and renames it into place, so a
// partially written report is never observable.
void atomic_write_text(const std::filesystem::path& path, std::string_view text);

} // namespace zaremba::io
