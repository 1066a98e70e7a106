#include "rangematch/csv.hpp"

namespace rangematch::csv {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += extra + 1;
  }
  return true;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Record> read_all() {
    std::vector<Record> records;
    while (pos_ < text_.size()) records.push_back(read_record());
    return records;
  }

 private:
  Record read_record() {
    Record record;
    record.line = line_;
    std::string field;
    bool quoted_field = false;
    while (true) {
      if (pos_ >= text_.size()) {
        finish_field(record, field);
        return record;
      }
      const char c = text_[pos_];
      if (field.empty() && !quoted_field && c == '"') {
        quoted_field = true;
        ++pos_;
        if (!read_quoted(field)) return fail(record, "unterminated quoted field");
        if (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '\n') {
          return fail(record, "unexpected text after closing quote");
        }
        continue;
      }
      if (c == ',') {
        ++pos_;
        finish_field(record, field);
        quoted_field = false;
        continue;
      }
      if (c == '\n') {
        ++pos_;
        ++line_;
        finish_field(record, field);
        return record;
      }
      if (c == '\r') return fail(record, "carriage return; only LF line endings are accepted");
      if (c == '"' || quoted_field) return fail(record, "quote character inside unquoted field");
      field.push_back(c);
      ++pos_;
    }
  }

  // Consumes up to and including the closing quote; false at end of input.
  bool read_quoted(std::string& field) {
    while (pos_ < text_.size()) {
      const char c = text_[pos_++];
      if (c == '"') {
        if (pos_ < text_.size() && text_[pos_] == '"') {
          field.push_back('"');
          ++pos_;
          continue;
        }
        return true;
      }
      if (c == '\n') ++line_;
      field.push_back(c);
    }
    return false;
  }

  void finish_field(Record& record, std::string& field) {
    if (!record.error && !valid_utf8(field)) record.error = "invalid UTF-8";
    record.fields.push_back(std::move(field));
    field.clear();
  }

  Record fail(Record& record, std::string reason) {
    record.error = std::move(reason);
    record.fields.clear();
    while (pos_ < text_.size()) {
      if (text_[pos_++] == '\n') {
        ++line_;
        break;
      }
    }
    return std::move(record);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

std::vector<Record> read_records(std::string_view text) { return Reader(text).read_all(); }

void append_field(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out.append(field);
    return;
  }
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace rangematch::csv
