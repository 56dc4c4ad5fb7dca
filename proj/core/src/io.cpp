#include "heroix/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace heroix {
namespace {

std::string location(int line, int column) {
  std::string s = "line " + std::to_string(line);
  if (column > 0) s += ", column " + std::to_string(column);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string pair_name(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : ValidationError(location(line, column) + ": " + what), line_(line), column_(column) {}

ParsedTournament parse_tournament(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && !lines[i].empty() && lines[i].front() == '#') ++i;
  if (i >= lines.size()) throw ParseError(static_cast<int>(i) + 1, 0, "missing vertex count");
  const int header_line = static_cast<int>(i) + 1;
  const std::string_view header = lines[i];
  int n = -1;
  const auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
  if (ec != std::errc() || ptr != header.data() + header.size() || n < 0) {
    throw ParseError(header_line, 0, "expected a non-negative vertex count");
  }
  ++i;
  std::vector<std::string_view> rows;
  for (int r = 0; r < n; ++r, ++i) {
    if (i >= lines.size()) {
      throw ParseError(static_cast<int>(i) + 1, 0,
                       "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    }
    const std::string_view row = lines[i];
    const int line_no = static_cast<int>(i) + 1;
    if (static_cast<int>(row.size()) != n) {
      throw ParseError(line_no, 0,
                       "row has " + std::to_string(row.size()) + " characters, expected " +
                           std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      if (row[c] != '0' && row[c] != '1') {
        throw ParseError(line_no, c + 1, "expected '0' or '1'");
      }
    }
    if (row[r] != '0') throw ParseError(line_no, r + 1, "diagonal entry must be 0");
    rows.push_back(row);
  }
  for (; i < lines.size(); ++i) {
    if (!lines[i].empty()) {
      throw ParseError(static_cast<int>(i) + 1, 0, "unexpected text after the last row");
    }
  }
  const int first_row_line = header_line + 1;
  Tournament t(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const bool ab = rows[a][b] == '1';
      const bool ba = rows[b][a] == '1';
      if (ab && ba) {
        throw ParseError(first_row_line + b, a + 1, "pair " + pair_name(a, b) + " assigned twice");
      }
      if (!ab && !ba) {
        throw ParseError(first_row_line + b, a + 1, "pair " + pair_name(a, b) + " unassigned");
      }
      if (ba) t.set_edge(b, a);
    }
  }
  return {std::move(t), Ordering::identity(n)};
}

std::string serialize_tournament(const Tournament& t, const Ordering& sigma) {
  if (sigma.size() != t.size()) {
    throw ValidationError("ordering size does not match the tournament");
  }
  const int n = t.size();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += t.has_edge(sigma[i], sigma[j]) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string serialize_tournament(const Tournament& t) {
  return serialize_tournament(t, Ordering::identity(t.size()));
}

ParsedTournament read_tournament_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_tournament(buf.str());
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_tournament_file(const std::string& path, const Tournament& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << serialize_tournament(t);
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

}  // namespace heroix
