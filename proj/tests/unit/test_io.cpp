#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "hexaframe/cube_text.hpp"
#include "hexaframe/random.hpp"
#include "hexaframe/solution_io.hpp"

using namespace hexaframe;

TEST_CASE("cube text: counts, comments and orientations") {
  const auto s = parse_cube_text(
      "# two cubes\n"
      "123456 x3\n"
      "\n"
      "124365\n"
      "  # indented comment\n"
      "135246\n");
  // 124365 is 123456 turned upside down.
  CHECK(s.count(Variety::parse("123456")) == 4);
  CHECK(s.count(Variety::parse("135246")) == 1);
  CHECK(s.total() == 5);
  CHECK(parse_cube_text("").empty());
}

TEST_CASE("cube text errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_cube_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("123456\n123455\n") == 2);
  CHECK(line_of("12345\n") == 1);
  CHECK(line_of("\n\n1234567\n") == 3);
  CHECK(line_of("123456 x0\n") == 1);
  CHECK(line_of("123456 x\n") == 1);
  CHECK(line_of("123456 y2\n") == 1);
  CHECK(line_of("123457\n") == 1);
  CHECK(line_of("123456 x2\n") == 0);
  CHECK_THROWS_AS(read_cube_file("/nonexistent/cubes.txt"), std::runtime_error);
}

TEST_CASE("cube text round trip") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_multiset(1 + static_cast<int>(rng.below(60)), rng);
    CHECK(parse_cube_text(format_cube_text(s)) == s);
  }
  CHECK(format_cube_text(CubeMultiset{{Variety(0), 2}, {Variety(3), 1}}) ==
        Variety(0).name() + " x2\n" + Variety(3).name() + "\n");
}

TEST_CASE("solution documents round trip") {
  Rng rng(42);
  for (int n = 2; n <= 5; ++n) {
    const auto s = random_multiset(guaranteed_size(n), rng);
    const auto sol = *build_frame(s, n);
    const auto back = solution_from_json(solution_to_json(sol));
    CHECK(back.n == sol.n);
    CHECK(back.model == sol.model);
    CHECK(back.placements == sol.placements);
    CHECK(solution_from_json(solution_to_json(sol, -1)).placements == sol.placements);
    const auto text = solution_to_text(sol);
    CHECK(std::count(text.begin(), text.end(), '\n') >= frame_size(n));
  }
}

TEST_CASE("malformed solution documents are rejected") {
  const auto good = solution_to_json(*build_frame(CubeMultiset{{Variety(2), 8}}, 2));
  CHECK_NOTHROW(solution_from_json(good));
  CHECK_THROWS_AS(solution_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(solution_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(solution_from_json(R"({"n": 2, "model": "123456"})"), std::invalid_argument);
  // A reflection parses; verification rejects it.
  const auto reflected = solution_from_json(R"({"n": 2, "model": "123456", "placements": [
      {"slot": {"kind": "corner", "index": 0, "offset": 0}, "variety": "123456",
       "rotation": [1, 0, 2, 3, 4, 5]}]})");
  CHECK_FALSE(verify_frame(reflected, 2).ok);
  CHECK_THROWS_AS(solution_from_json(R"({"n": 2, "model": "123456", "placements": [
      {"slot": {"kind": "corner", "index": 0, "offset": 0}, "variety": "123456",
       "rotation": [0, 0, 2, 3, 4, 5]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(solution_from_json(R"({"n": 2, "model": "123456", "placements": [
      {"slot": {"kind": "face", "index": 0, "offset": 0}, "variety": "123456",
       "rotation": [0, 1, 2, 3, 4, 5]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(solution_from_json(R"({"n": 2, "model": "112233", "placements": []})"),
                  std::invalid_argument);
}
