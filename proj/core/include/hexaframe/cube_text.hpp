#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hexaframe/multiset.hpp"

namespace hexaframe {

/// Malformed cube text; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Cube text format: one cube per line as six face digits in face-position
// order, optionally followed by " xK" for K copies. Blank lines and lines
// starting with '#' are ignored. Any orientation of a cube is accepted.
CubeMultiset parse_cube_text(std::istream& in);
CubeMultiset parse_cube_text(std::string_view text);
CubeMultiset read_cube_file(const std::filesystem::path& path);

/// One line per variety present, canonical face string first.
std::string format_cube_text(const CubeMultiset& s);

}  // namespace hexaframe
