#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rangematch::csv {

/// One physical record. `line` is the 1-based line the record starts on.
/// When `error` is set the fields are unusable and the reader has resynchronised
/// at the next line.
struct Record {
  std::size_t line = 0;
  std::vector<std::string> fields;
  std::optional<std::string> error;
};

/// Strict reader: comma separator, double-quote escaping ("" inside quotes),
/// LF line endings. A bare CR, a quote inside an unquoted field, text after a
/// closing quote, or invalid UTF-8 marks the record as malformed.
std::vector<Record> read_records(std::string_view text);

/// Appends `field`, quoting it only when it contains a comma, quote, CR or LF.
void append_field(std::string& out, std::string_view field);

}  // namespace rangematch::csv
