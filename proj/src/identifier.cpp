#include "rangematch/identifier.hpp"

#include <cctype>

namespace rangematch {

std::string normalize_identifier(std::string_view text) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

  std::string out;
  out.reserve(text.size());
  bool pending_separator = false;
  for (const char c : text) {
    if (is_space(c) || c == '-') {
      pending_separator = true;
      continue;
    }
    if (pending_separator && !out.empty() && out.back() != '_') out.push_back('_');
    pending_separator = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace rangematch
