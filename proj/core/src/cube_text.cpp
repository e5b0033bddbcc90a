#include "hexaframe/cube_text.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hexaframe {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

CubeMultiset parse_cube_text(std::istream& in) {
  CubeMultiset out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto space = line.find_first_of(" \t");
    const std::string_view faces = line.substr(0, space);
    int copies = 1;
    if (space != std::string_view::npos) {
      std::string_view suffix = trim(line.substr(space));
      if (suffix.size() < 2 || suffix.front() != 'x')
        throw ParseError(line_no, "expected ' xK' repetition suffix, got '" + std::string(suffix) + "'");
      suffix.remove_prefix(1);
      const auto [end, ec] = std::from_chars(suffix.data(), suffix.data() + suffix.size(), copies);
      if (ec != std::errc{} || end != suffix.data() + suffix.size() || copies < 1)
        throw ParseError(line_no, "repetition count must be a positive integer");
    }
    try {
      const auto cube = OrientedCube::from_string(faces);
      out.add(canonicalize(cube), copies);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

CubeMultiset parse_cube_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cube_text(in);
}

CubeMultiset read_cube_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cube file " + path.string());
  return parse_cube_text(in);
}

std::string format_cube_text(const CubeMultiset& s) {
  std::string out;
  for (const auto& v : Variety::all()) {
    const int k = s.count(v);
    if (k == 0) continue;
    out += v.name();
    if (k > 1) out += " x" + std::to_string(k);
    out += '\n';
  }
  return out;
}

}  // namespace hexaframe
