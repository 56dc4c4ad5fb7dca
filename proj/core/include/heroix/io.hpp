#pragma once

#include <string>
#include <string_view>

#include "heroix/error.hpp"
#include "heroix/tournament.hpp"

namespace heroix {

/// Malformed tournament text. Line and column are 1-based; column is 0
/// when the whole line is at fault.
class ParseError : public ValidationError {
 public:
  ParseError(int line, int column, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedTournament {
  Tournament t;
  /// The order of the rows in the file, which is the identity.
  Ordering order;
};

/// Text format: optional leading '#' comment lines, a line holding n, then
/// n rows of n characters over {0,1}; row i, column j is '1' iff i -> j.
ParsedTournament parse_tournament(std::string_view text);

/// Writes rows in the order sigma, so vertex sigma[i] becomes row i.
std::string serialize_tournament(const Tournament& t, const Ordering& sigma);
std::string serialize_tournament(const Tournament& t);

/// File wrappers. Unreadable or unwritable files raise ValidationError.
ParsedTournament read_tournament_file(const std::string& path);
void write_tournament_file(const std::string& path, const Tournament& t);

}  // namespace heroix
