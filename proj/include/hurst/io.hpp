#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace hurst {

/// Shortest round-trip decimal form; '.' separator regardless of locale.
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return {buf, res.ptr};
}

/// Empty for NaN, otherwise format_double.
inline std::string format_optional(double value) {
  return std::isnan(value) ? std::string{} : format_double(value);
}

/// Quotes a CSV field when it contains a comma, quote or newline.
inline std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline bool parse_double(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc{} && res.ptr == text.data() + text.size();
}

/**
 * Reads a single-column series CSV. A first line that does not parse as a
 * number is treated as a header (conventionally `value`). Blank lines are
 * ignored; any other unparsable line is an error.
 */
inline std::vector<double> read_series_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    double v = 0.0;
    if (parse_double(line, v)) {
      values.push_back(v);
    } else if (line_no == 1) {
      continue;
    } else {
      throw std::runtime_error("series CSV: cannot parse line " + std::to_string(line_no) + ": '" +
                               line + "'");
    }
  }
  return values;
}

inline std::vector<double> read_series_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open series file " + file.string());
  return read_series_csv(in);
}

inline void write_series_csv(std::ostream& out, const std::vector<double>& values) {
  out << "value\n";
  for (double v : values) out << format_double(v) << '\n';
}

inline void write_series_csv(const std::filesystem::path& file, const std::vector<double>& values) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write series file " + file.string());
  write_series_csv(out, values);
}

}  // namespace hurst
