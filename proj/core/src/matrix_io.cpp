#include "osbop/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "osbop/errors.hpp"

namespace osbop {

namespace {

constexpr double kIoTolerance = 1e-6;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> nonempty_lines(std::string_view content) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    const std::string_view line = trim(content.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
    if (!line.empty()) lines.push_back(line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

double parse_double(std::string_view token, int row, int column) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad matrix entry '" + std::string(token) + "' at row " +
                     std::to_string(row) + ", column " + std::to_string(column));
  return value;
}

}  // namespace

PairOrderMatrix read_matrix(std::string_view content) {
  const auto lines = nonempty_lines(content);
  if (lines.empty()) throw ParseError("empty matrix file");

  int n = 0;
  {
    const std::string_view head = lines.front();
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
    if (ec != std::errc{} || ptr != head.data() + head.size() || n < 1)
      throw ParseError("first line must be the item count, got '" + std::string(head) + "'");
  }
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                     std::to_string(lines.size() - 1));

  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) {
    const std::string_view line = lines[static_cast<std::size_t>(row)];
    int column = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view token =
          line.substr(start, comma == std::string_view::npos ? comma : comma - start);
      ++column;
      const double x = parse_double(token, row, column);
      if (x < 0.0 || x > 1.0)
        throw ValidationError("entry (" + std::to_string(row) + "," +
                              std::to_string(column) + ") = " + std::to_string(x) +
                              " outside [0,1]");
      entries.push_back(x);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (column != n)
      throw ParseError("row " + std::to_string(row) + " has " + std::to_string(column) +
                       " entries, expected " + std::to_string(n));
  }

  auto cell = [&entries, n](int u, int v) -> double& {
    return entries[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v - 1)];
  };
  for (int u = 1; u <= n; ++u) {
    if (std::abs(cell(u, u) - 0.5) > kIoTolerance)
      throw ValidationError("diagonal entry (" + std::to_string(u) + "," +
                            std::to_string(u) + ") must be 0.5");
    cell(u, u) = 0.5;
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const double x = cell(u, v);
      const double y = cell(v, u);
      if (x + y == 1.0) continue;  // exact pairs stay untouched (bit-exact round trips)
      if (std::abs(x + y - 1.0) > kIoTolerance)
        throw ValidationError("entries (" + std::to_string(u) + "," + std::to_string(v) +
                              ") and (" + std::to_string(v) + "," + std::to_string(u) +
                              ") sum to " + std::to_string(x + y) + ", expected 1");
      const double repaired = 0.5 * (x + (1.0 - y));
      cell(u, v) = repaired;
      cell(v, u) = 1.0 - repaired;
    }
  }
  return PairOrderMatrix(n, std::move(entries));
}

std::string write_matrix(const PairOrderMatrix& c) {
  const int n = c.item_count();
  std::string out = std::to_string(n) + "\n";
  char buffer[32];
  for (Item u = 1; u <= n; ++u) {
    for (Item v = 1; v <= n; ++v) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", c.at(u, v));
      if (v > 1) out += ',';
      out += buffer;
    }
    out += '\n';
  }
  return out;
}

}  // namespace osbop
