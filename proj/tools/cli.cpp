#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hexaframe/cube_text.hpp"
#include "hexaframe/frame.hpp"
#include "hexaframe/lemmas.hpp"
#include "hexaframe/matching.hpp"
#include "hexaframe/parallel.hpp"
#include "hexaframe/solution_io.hpp"
#include "hexaframe/tableau.hpp"

namespace hexaframe::cli {
namespace {

using nlohmann::json;

// Thrown by command handlers for bad input discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::vector<std::string> duad_strings(const std::vector<Duad>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.to_string());
  return out;
}

std::vector<std::string> triple_strings(Variety v) {
  std::vector<std::string> out;
  for (const auto& t : v.corner_triples()) out.push_back(t.to_string());
  return out;
}

std::vector<std::string> opposite_strings(Variety v) {
  std::vector<std::string> out;
  for (const auto& d : v.syntheme().duads) out.push_back(d.to_string());
  return out;
}

int cmd_varieties(const std::string& format, std::ostream& out) {
  const Tableau& t = tableau();
  if (format == "cubes") {
    for (const auto& v : Variety::all()) out << v.name() << '\n';
  } else if (format == "json") {
    json list = json::array();
    for (const auto& v : Variety::all())
      list.push_back({{"index", v.index()},
                      {"faces", v.name()},
                      {"cell", t.label_of(v)},
                      {"mirror", mirror(v).name()},
                      {"opposite", opposite_strings(v)},
                      {"adjacent", duad_strings(v.adjacent_pairs())},
                      {"corners", triple_strings(v)}});
    out << list.dump(2) << '\n';
  } else {
    for (const auto& v : Variety::all()) {
      out << std::setw(2) << v.index() << "  " << v.name() << "  " << t.label_of(v) << "  opposite "
          << join(opposite_strings(v), "") << "  adjacent " << join(duad_strings(v.adjacent_pairs()), "")
          << "  corners " << join(triple_strings(v), "") << '\n';
    }
  }
  return kOk;
}

int cmd_tableau(bool pretty, std::ostream& out) {
  const Tableau& t = tableau();
  const auto ps = pentads();
  if (pretty) {
    out << "   ";
    for (int c = 0; c < 6; ++c) out << std::setw(20) << std::left << std::string(1, column_label(c));
    out << std::right << '\n';
    for (int r = 0; r < 6; ++r) {
      out << row_label(r) << "  ";
      for (int c = 0; c < 6; ++c) {
        std::string cell = r == c ? "-" : t.cell(r, c).name() + " " + t.cell(r, c).syntheme().to_string();
        out << std::setw(20) << std::left << cell;
      }
      out << std::right << '\n';
    }
    out << '\n';
    for (int p = 0; p < 6; ++p) {
      std::vector<std::string> syn;
      for (int s : ps[p].synthemes) syn.push_back(all_synthemes()[s].to_string());
      out << "pentad " << row_label(p) << "/" << column_label(p) << ": " << join(syn, " ") << '\n';
    }
    return kOk;
  }
  json doc;
  json plist = json::array();
  for (int p = 0; p < 6; ++p) {
    json syn = json::array();
    for (int s : ps[p].synthemes) syn.push_back(all_synthemes()[s].to_string());
    plist.push_back({{"index", p}, {"row", std::string(1, row_label(p))},
                     {"column", std::string(1, column_label(p))}, {"synthemes", syn}});
  }
  doc["pentads"] = plist;
  doc["rows"] = {0, 1, 2, 3, 4, 5};
  doc["cols"] = {0, 1, 2, 3, 4, 5};
  json cells = json::array();
  for (int r = 0; r < 6; ++r) {
    json row = json::array();
    for (int c = 0; c < 6; ++c) row.push_back(r == c ? json(nullptr) : json(t.cell(r, c).name()));
    cells.push_back(row);
  }
  doc["cells"] = cells;
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_sigma(const std::string& text, std::ostream& out) {
  ColorPermutation pi;
  try {
    pi = parse_cycles(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto s = sigma(pi);
  out << "colors  " << to_cycle_string(pi) << "  cycle type " << cycle_type_string(pi.cycle_type()) << '\n';
  out << "pentads " << to_cycle_string(s) << "  cycle type " << cycle_type_string(s.cycle_type()) << '\n';
  return kOk;
}

int cmd_solve(int n, const std::string& cubes_path, const std::string& out_path, bool pretty, std::ostream& out,
              std::ostream& err) {
  if (n < 2) throw UsageError("--n must be at least 2");
  CubeMultiset cubes;
  try {
    cubes = read_cube_file(cubes_path);
  } catch (const ParseError& e) {
    throw UsageError(cubes_path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (cubes.total() < frame_size(n))
    throw UsageError("an n=" + std::to_string(n) + " frame needs " + std::to_string(frame_size(n)) +
                     " cubes, file has " + std::to_string(cubes.total()));
  const auto sol = build_frame(cubes, n);
  if (!sol) {
    err << "no n=" << n << " frame can be built from these " << cubes.total() << " cubes\n";
    return kNegative;
  }
  const auto check = verify_frame(*sol, n, cubes);
  if (!check.ok) throw std::logic_error("built frame failed verification: " + check.violations.front());
  const std::string doc = solution_to_json(*sol) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write " + out_path);
    f << doc;
  }
  if (pretty)
    out << solution_to_text(*sol);
  else if (out_path.empty())
    out << doc;
  return kOk;
}

void print_report(const CheckReport& r, std::ostream& out) {
  out << "check " << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases << " cases";
  if (r.expected_negatives) out << ", " << r.expected_negatives << " expected negatives";
  out << ", " << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
  out.unsetf(std::ios::fixed);
  for (const auto& note : r.notes) out << "  " << note << '\n';
  for (const auto& f : r.failures) {
    out << "# " << f.reason << '\n';
    if (f.cubes) out << format_cube_text(*f.cubes);
  }
}

int cmd_verify(const std::string& id, bool long_run, const CheckOptions& opt, std::ostream& out,
               std::ostream& err) {
  if (id == "list") {
    for (const auto& c : check_registry())
      out << std::setw(20) << std::left << c.id << std::right << (c.long_running ? " [long] " : "        ")
          << c.summary << '\n';
    return kOk;
  }
  const auto reg = check_registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.id == id; });
  if (it == reg.end()) throw UsageError("unknown check '" + id + "' (try 'verify list')");
  if (it->long_running && !long_run) throw UsageError("check '" + id + "' is long-running; pass --long");
  CheckOptions o = opt;
  if (long_run) o.progress = [&err](const std::string& line) { err << line << '\n'; };
  const auto report = run_check(id, o);
  print_report(report, out);
  return report.passed() ? kOk : kNegative;
}

int cmd_counterexample(bool extend, std::ostream& out) {
  const auto s = counterexample_23_family().front();
  out << "# seven copies of three varieties of pentad row A, one of the other two\n";
  out << format_cube_text(s);
  const bool solvable = find_corner_solution(s).has_value();
  out << "# " << s.total() << " cubes: " << (solvable ? "corner solution found" : "no corner solution") << '\n';
  bool all_extend = true;
  if (extend) {
    for (const auto& v : Variety::all()) {
      CubeMultiset t = s;
      t.add(v);
      const auto sol = find_corner_solution(t);
      all_extend &= sol.has_value();
      out << "+ " << v.name() << ": " << (sol ? "corner solution modeled on " + sol->model.name() : "none") << '\n';
    }
  }
  return (!solvable && all_extend) ? kOk : kNegative;
}

int cmd_count(int k, std::ostream& out) {
  if (k < 2 || k > 6) throw UsageError("--k must be in 2..6");
  static const int reference[] = {0, 0, 8, 32, 68, 75, 30};
  const auto computed = count_varieties(k);
  out << "k=" << k << " computed " << computed << " reference " << reference[k];
  if (computed == reference[k])
    out << " agree\n";
  else
    out << " DISCREPANCY\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored-cube frame builder and lemma checker", "hexaframe"};
  app.require_subcommand(1);

  std::string format = "text";
  auto* varieties = app.add_subcommand("varieties", "List the 30 cube varieties");
  varieties->add_option("--format", format, "text, json or cubes")->check(CLI::IsMember({"text", "json", "cubes"}));

  bool pretty = false;
  auto* tab = app.add_subcommand("tableau", "Show the 6x6 variety tableau");
  tab->add_flag("--pretty", pretty, "Text grid instead of JSON");

  std::string perm;
  auto* sig = app.add_subcommand("sigma", "Pentad action of a color permutation");
  sig->add_option("perm", perm, "Cycle notation over colors 1..6, e.g. \"(1 2)(3 4)\"")->required();

  int n = 3;
  std::string cubes_path, out_path;
  auto* solve = app.add_subcommand("solve", "Build an n-frame from a cube file");
  solve->add_option("--n", n, "Frame size")->required();
  solve->add_option("--cubes", cubes_path, "Cube text file")->required();
  solve->add_option("--out", out_path, "Write the solution document here");
  solve->add_flag("--pretty", pretty, "Per-slot text view");

  std::string check_id;
  bool long_run = false;
  CheckOptions opt;
  opt.workers = default_workers();
  auto* verify = app.add_subcommand("verify", "Run a lemma check ('verify list' shows all)");
  verify->add_option("check", check_id, "Check id")->required();
  verify->add_flag("--long", long_run, "Allow long-running checks");
  verify->add_option("--seed", opt.seed, "Seed for randomized parts");
  verify->add_option("--trials", opt.trials, "Trials for randomized checks");
  verify->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--n", opt.n, "Frame size for the fuzz check")->check(CLI::Range(2, 64));

  int fuzz_n = 3, trials = 1000, fuzz_workers = default_workers();
  std::uint64_t seed = 1;
  auto* fuzz = app.add_subcommand("fuzz", "Seeded random multisets at the guaranteed size");
  fuzz->add_option("--n", fuzz_n, "Frame size")->required()->check(CLI::Range(2, 64));
  fuzz->add_option("--trials", trials, "Number of multisets")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed, "Seed")->required();
  fuzz->add_option("--workers", fuzz_workers, "Worker threads")->check(CLI::PositiveNumber);

  bool extend = false;
  auto* cex = app.add_subcommand("counterexample", "The 23-cube multiset with no corner solution");
  cex->add_flag("--extend", extend, "Also try every 24th cube");

  int k = 6;
  auto* count = app.add_subcommand("count", "Cube varieties using exactly k colors");
  count->add_option("--k", k, "Number of colors")->required();

  std::vector<const char*> argv{"hexaframe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*varieties) return cmd_varieties(format, out);
    if (*tab) return cmd_tableau(pretty, out);
    if (*sig) return cmd_sigma(perm, out);
    if (*solve) return cmd_solve(n, cubes_path, out_path, pretty, out, err);
    if (*verify) return cmd_verify(check_id, long_run, opt, out, err);
    if (*fuzz) {
      const auto report = fuzz_guarantees(fuzz_n, trials, seed, fuzz_workers);
      print_report(report, out);
      return report.passed() ? kOk : kNegative;
    }
    if (*cex) return cmd_counterexample(extend, out);
    if (*count) return cmd_count(k, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hexaframe::cli
