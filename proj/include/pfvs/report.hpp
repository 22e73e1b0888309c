#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pfvs/errors.hpp"
#include "pfvs/rational.hpp"

namespace pfvs {

// Machine-readable output: one record per line, space-separated key=value
// pairs, values percent-escaped.  The stream opens with a version header so
// readers can reject formats they do not understand.
inline constexpr const char* kRecordHeader = "#pfvs-records 1";

namespace detail_report {

inline bool valid_key_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-' || c == '.';
}

inline void require_key(const std::string& key) {
  internal_check(!key.empty(), "empty record key");
  for (char c : key)
    internal_check(valid_key_char(c), "bad record key: " + key);
}

inline bool needs_escape(char c) {
  return c == '%' || c == '=' || c == ' ' || c == '\t' || c == '\n' ||
         c == '\r';
}

}  // namespace detail_report

inline std::string escape_value(const std::string& raw) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (detail_report::needs_escape(c)) {
      unsigned char b = static_cast<unsigned char>(c);
      out += '%';
      out += hex[b >> 4];
      out += hex[b & 15];
    } else {
      out += c;
    }
  }
  return out;
}

inline std::string unescape_value(const std::string& enc, int line_no) {
  auto hex_digit = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError("line " + std::to_string(line_no) +
                     ": bad escape in record value");
  };
  std::string out;
  out.reserve(enc.size());
  for (std::size_t i = 0; i < enc.size(); ++i) {
    if (enc[i] != '%') {
      out += enc[i];
      continue;
    }
    if (i + 2 >= enc.size())
      throw ParseError("line " + std::to_string(line_no) +
                       ": truncated escape in record value");
    out += static_cast<char>(hex_digit(enc[i + 1]) * 16 + hex_digit(enc[i + 2]));
    i += 2;
  }
  return out;
}

// Ordered field list; order is part of the byte-identical output contract.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record& set(const std::string& key, const std::string& value) {
    detail_report::require_key(key);
    fields.emplace_back(key, value);
    return *this;
  }
  Record& set(const std::string& key, const char* value) {
    return set(key, std::string(value));
  }
  Record& set(const std::string& key, long value) {
    return set(key, std::to_string(value));
  }
  Record& set(const std::string& key, int value) {
    return set(key, std::to_string(value));
  }
  Record& set(const std::string& key, const Rat& value) {
    return set(key, rat_str(value));
  }
  Record& set(const std::string& key, bool value) {
    return set(key, std::string(value ? "1" : "0"));
  }

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return &v;
    return nullptr;
  }

  std::string line() const {
    internal_check(!fields.empty(), "record with no fields");
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ' ';
      detail_report::require_key(fields[i].first);
      out += fields[i].first;
      out += '=';
      out += escape_value(fields[i].second);
    }
    return out;
  }
};

struct RecordWriter {
  std::ostream& out;
  bool header_written = false;

  explicit RecordWriter(std::ostream& os) : out(os) {}
  void write(const Record& r) {
    if (!header_written) {
      out << kRecordHeader << '\n';
      header_written = true;
    }
    out << r.line() << '\n';
  }
  // An empty stream still carries the header, so consumers can tell an
  // empty result from a missing one.
  void finish() {
    if (!header_written) {
      out << kRecordHeader << '\n';
      header_written = true;
    }
  }
};

inline std::vector<Record> parse_records(std::istream& in) {
  std::vector<Record> out;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!saw_header) {
        if (line != kRecordHeader)
          throw ParseError("line " + std::to_string(line_no) +
                           ": expected header '" + kRecordHeader + "'");
        saw_header = true;
      }
      continue;
    }
    if (!saw_header)
      throw ParseError("line " + std::to_string(line_no) +
                       ": record before header");
    Record rec;
    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      std::size_t eq = tok.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": token without key=value shape");
      std::string key = tok.substr(0, eq);
      for (char c : key)
        if (!detail_report::valid_key_char(c))
          throw ParseError("line " + std::to_string(line_no) +
                           ": bad key '" + key + "'");
      rec.fields.emplace_back(key, unescape_value(tok.substr(eq + 1), line_no));
    }
    internal_check(!rec.fields.empty(), "tokenizer produced an empty record");
    out.push_back(std::move(rec));
  }
  if (!saw_header) throw ParseError("record stream is missing its header");
  return out;
}

inline std::vector<Record> parse_records_string(const std::string& text) {
  std::istringstream in(text);
  return parse_records(in);
}

}  // namespace pfvs
