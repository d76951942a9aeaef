#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhyp/io.hpp"

namespace fhyp::io_detail {

inline std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] inline void fail(int lineno, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

// Reader that skips blank and comment lines and tracks line numbers.
struct Lines {
  std::istream& in;
  int lineno = 0;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      out = strip(raw);
      if (!out.empty()) return true;
    }
    return false;
  }
  std::string expect(const std::string& what) {
    std::string s;
    if (!next(s)) fail(lineno, "unexpected end of file, expected " + what);
    return s;
  }
};

template <typename F>
FRow<F> parse_packed_row(const std::string& line, int entries, int lineno) {
  constexpr int comps = int(field_traits<F>::components);
  std::istringstream is(line);
  FRow<F> row(entries);
  std::vector<double> buf(comps);
  for (int e = 0; e < entries; ++e) {
    for (int c = 0; c < comps; ++c)
      if (!(is >> buf[c])) fail(lineno, "expected " + std::to_string(entries * comps) + " numbers");
    row(e) = field_traits<F>::unpack(buf);
  }
  double extra;
  if (is >> extra) fail(lineno, "trailing numbers");
  return row;
}

template <typename F>
void print_packed_row(std::ostream& out, const FRow<F>& row) {
  constexpr int comps = int(field_traits<F>::components);
  std::vector<double> buf(comps);
  for (Eigen::Index e = 0; e < row.size(); ++e) {
    field_traits<F>::pack(row(e), buf);
    for (int c = 0; c < comps; ++c) {
      if (e != 0 || c != 0) out << ' ';
      out << format_double(buf[c]);
    }
  }
  out << '\n';
}

inline std::string header_value(Lines& lines, const std::string& key) {
  const std::string s = lines.expect("'" + key + "' header");
  std::istringstream is(s);
  std::string k, v;
  is >> k >> v;
  if (k != key || v.empty()) fail(lines.lineno, "expected '" + key + " <value>'");
  return v;
}

}  // namespace fhyp::io_detail
