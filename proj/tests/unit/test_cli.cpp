#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hexaframe/cube_text.hpp"
#include "hexaframe/lemmas.hpp"
#include "hexaframe/random.hpp"
#include "hexaframe/solution_io.hpp"
#include "json.hpp"

using namespace hexaframe;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const auto p = fs::temp_directory_path() / ("hexaframe_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"sigma", "(1 7)"}).code == cli::kUsage);
  CHECK(run({"sigma", "(1 2"}).code == cli::kUsage);
  CHECK(run({"count", "--k", "7"}).code == cli::kUsage);
  CHECK(run({"verify", "ten-varieties"}).code == cli::kUsage);
  CHECK(run({"verify", "nope"}).code == cli::kUsage);
  CHECK(run({"solve", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"solve", "--n", "3", "--cubes", "/nonexistent/x.txt"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("varieties and tableau") {
  const auto cubes = run({"varieties", "--format", "cubes"});
  CHECK(cubes.code == 0);
  const auto s = parse_cube_text(cubes.out);
  CHECK(s.total() == 30);
  CHECK(s.distinct() == 30);
  const auto j = nlohmann::json::parse(run({"varieties", "--format", "json"}).out);
  CHECK(j.size() == 30);
  CHECK(j[0]["corners"].size() == 8);
  CHECK(j[0]["adjacent"].size() == 12);
  const auto t = nlohmann::json::parse(run({"tableau"}).out);
  CHECK(t["cells"][0][0].is_null());
  CHECK(t["cells"][0][1] == "123456");
  CHECK(t["pentads"].size() == 6);
  CHECK(run({"tableau", "--pretty"}).code == 0);
  CHECK(run({"varieties"}).out.find("123456") != std::string::npos);
}

TEST_CASE("sigma reports both cycle types") {
  const auto r = run({"sigma", "(1 2)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cycle type 2\n") != std::string::npos);
  CHECK(r.out.find("cycle type 2+2+2") != std::string::npos);
  const auto id = run({"sigma", "()"});
  CHECK(id.code == 0);
}

TEST_CASE("solve: success, honest negative and bad input") {
  Rng rng(51);
  const auto good = temp_file("good.txt", format_cube_text(random_multiset(24, rng)));
  const auto out = fs::path(good.string() + ".json");
  const auto r = run({"solve", "--n", "3", "--cubes", good.string(), "--out", out.string()});
  CHECK(r.code == 0);
  std::ifstream in(out);
  const std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto sol = solution_from_json(doc);
  CHECK(verify_frame(sol, 3, read_cube_file(good)).ok);
  CHECK(run({"solve", "--n", "3", "--cubes", good.string(), "--pretty"}).code == 0);

  const auto cex = temp_file("cex.txt", format_cube_text(counterexample_23_family().front()));
  CHECK(run({"solve", "--n", "2", "--cubes", cex.string()}).code == cli::kNegative);

  const auto bad = temp_file("bad.txt", "123456\n\n123451\n");
  const auto b = run({"solve", "--n", "2", "--cubes", bad.string()});
  CHECK(b.code == cli::kUsage);
  CHECK(b.err.find("line 3") != std::string::npos);

  const auto few = temp_file("few.txt", "123456 x19\n");
  CHECK(run({"solve", "--n", "3", "--cubes", few.string()}).code == cli::kUsage);

  for (const auto& p : {good, out, cex, bad, few}) fs::remove(p);
}

TEST_CASE("verify, fuzz, counterexample and count") {
  CHECK(run({"verify", "list"}).out.find("ten-varieties") != std::string::npos);
  const auto v = run({"verify", "pair-lemmas"});
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);
  CHECK(run({"fuzz", "--n", "3", "--trials", "50", "--seed", "4"}).code == 0);
  CHECK(run({"fuzz", "--n", "3", "--trials", "50"}).code == cli::kUsage);
  const auto c = run({"counterexample", "--extend"});
  CHECK(c.code == 0);
  CHECK(c.out.find("no corner solution") != std::string::npos);
  const auto k3 = run({"count", "--k", "3"});
  CHECK(k3.code == 0);
  CHECK(k3.out.find("computed 30") != std::string::npos);
  CHECK(k3.out.find("DISCREPANCY") != std::string::npos);
  CHECK(run({"count", "--k", "6"}).out.find("agree") != std::string::npos);
}
