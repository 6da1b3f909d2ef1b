#pragma once

// Deterministic JSON / CSV emission. Doubles always go through format_double
// so identical inputs give identical bytes.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <unistd.h>

#include "circle_sqm/cli/config.hpp"

namespace circle_sqm::cli {

/// 17 significant digits; -0 is written as 0.
inline std::string format_double(double v) {
  if (v == 0.0) return "0";
  return fmt::format("{:.17g}", v);
}

inline std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

inline std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<unsigned>(ch));
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

/// Streaming writer for nested objects and arrays, two-space indentation.
/// Arrays of plain numbers stay on one line.
class JsonWriter {
 public:
  JsonWriter& begin_object(std::string_view key = {}) { return open(key, '{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array(std::string_view key = {}) { return open(key, '['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& field(std::string_view key, std::string_view value) { return raw(key, json_string(value)); }
  JsonWriter& field(std::string_view key, const char* value) { return raw(key, json_string(value)); }
  JsonWriter& field(std::string_view key, double value) { return raw(key, json_number(value)); }
  JsonWriter& field(std::string_view key, int value) { return raw(key, std::to_string(value)); }
  JsonWriter& field(std::string_view key, std::size_t value) { return raw(key, std::to_string(value)); }
  JsonWriter& field(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
  JsonWriter& null_field(std::string_view key) { return raw(key, "null"); }

  JsonWriter& field(std::string_view key, const std::vector<double>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ", ";
      s += json_number(values[i]);
    }
    return raw(key, s + "]");
  }

  std::string str() const { return out_ + "\n"; }

 private:
  JsonWriter& raw(std::string_view key, std::string_view text) {
    separator();
    if (!key.empty()) out_ += json_string(key) + ": ";
    out_ += text;
    return *this;
  }

  JsonWriter& open(std::string_view key, char bracket) {
    raw(key, std::string(1, bracket));
    first_.push_back(true);
    return *this;
  }

  JsonWriter& close(char bracket) {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) {
      out_ += "\n" + std::string(2 * first_.size(), ' ');
    }
    out_ += bracket;
    return *this;
  }

  void separator() {
    if (first_.empty()) return;
    if (!first_.back()) out_ += ",";
    first_.back() = false;
    out_ += "\n" + std::string(2 * first_.size(), ' ');
  }

  std::string out_;
  std::vector<bool> first_;
};

/// RFC 4180 quoting, only when needed.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  return row + "\r\n";
}

/// Writes to `path` through a temporary file in the same directory and a
/// rename, or to `fallback` when no path is given.
inline void write_output(const std::string& content, const std::optional<std::string>& path,
                         std::ostream& fallback = std::cout) {
  if (!path) {
    fallback << content;
    fallback.flush();
    return;
  }
  const std::filesystem::path target(*path);
  std::filesystem::path tmp = target;
  tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw ConfigError("cannot open output file " + tmp.string());
    }
    f << content;
    f.flush();
    if (!f) {
      std::filesystem::remove(tmp);
      throw ConfigError("failed writing output file " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ConfigError("cannot move output into place at " + target.string() + ": " + ec.message());
  }
}

}  // namespace circle_sqm::cli
