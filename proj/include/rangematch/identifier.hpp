#pragma once

#include <string>
#include <string_view>

namespace rangematch {

/// Lowercase snake_case form of a label: "Build Speed" -> "build_speed".
/// Leading/trailing whitespace is dropped and runs of spaces or hyphens collapse to one '_'.
std::string normalize_identifier(std::string_view text);

}  // namespace rangematch
