// Command-line front end.
//
// Exit codes: 0 success, 1 infeasible instance, 2 malformed input,
// 3 oracle budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrst/generator.hpp"
#include "lrst/io.hpp"
#include "lrst/model.hpp"
#include "lrst/oracle.hpp"
#include "lrst/scaling.hpp"
#include "lrst/svg.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FileError("write to '" + path + "' failed");
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

void print_violations(const lrst::ValidationReport& report) {
  for (const auto& v : report.violations) {
    std::cerr << "  " << lrst::violation_kind_name(v.kind);
    if (!v.where.empty()) std::cerr << " [" << v.where << "]";
    std::cerr << ": " << v.message << "\n";
  }
}

int cmd_validate(const std::string& file) {
  const lrst::InstanceData data = lrst::parse_instance_data(read_file(file));
  const lrst::ValidationReport report = lrst::validate_instance(data);
  if (!report.ok) {
    std::cerr << "invalid instance '" << data.name << "':\n";
    print_violations(report);
    std::cout << "valid=false feasible=false\n";
    return kExitMalformed;
  }
  std::cout << "valid=true feasible=" << bool_name(report.feasible) << "\n";
  return report.feasible ? kExitOk : kExitInfeasible;
}

struct SolveArgs {
  std::string file;
  std::string mode = "practical";
  std::string out;
  std::string svg;
  std::string report;
};

int cmd_solve(const SolveArgs& args) {
  const lrst::Instance inst = lrst::parse_instance(read_file(args.file));
  lrst::SolveConfig config;
  config.mode = lrst::parse_mode(args.mode);
  const auto started = std::chrono::steady_clock::now();
  const lrst::SolveReport report = lrst::solve(inst, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

  if (!args.out.empty()) write_file(args.out, lrst::write_solution(inst, report));
  if (!args.svg.empty()) write_file(args.svg, lrst::render_svg(inst, &report.final_embedding));
  if (!args.report.empty()) write_file(args.report, lrst::write_report(inst, report));
  std::cout << "cost2=" << report.cost << " feasible=" << bool_name(report.feasible)
            << " levels=" << report.levels.size() << "\n";
  std::fprintf(stderr, "solved '%s' in %.3f s\n", inst.name().c_str(), elapsed.count());
  return report.feasible ? kExitOk : kExitInfeasible;
}

int cmd_oracle(const std::string& file, std::uint64_t budget, const std::string& out) {
  const lrst::Instance inst = lrst::parse_instance(read_file(file));
  if (!inst.is_feasible()) throw lrst::InfeasibleInstance("instance '" + inst.name() + "' is infeasible");
  lrst::OracleOptions options;
  options.budget.max_placements = budget;
  const lrst::OracleResult result = lrst::brute_force_optimum(inst, options);
  if (!out.empty()) write_file(out, lrst::write_embedding(inst, result.embedding, "oracle"));
  std::cout << "cost2=" << result.cost << " feasible=true leaves=" << result.leaves_visited << "\n";
  return kExitOk;
}

int cmd_check(const std::string& file, const std::string& solution) {
  const lrst::Instance inst = lrst::parse_instance(read_file(file));
  const lrst::SolutionDocument doc = lrst::parse_solution(read_file(solution));
  const lrst::CheckResult result = lrst::check_solution(inst, doc);
  std::cout << "cost2=" << result.cost2 << " feasible=" << bool_name(result.feasible)
            << " agrees=" << bool_name(result.agrees()) << "\n";
  if (!result.cost_matches) std::cerr << "declared cost2=" << doc.cost2 << " does not match\n";
  if (!result.feasible_matches) std::cerr << "declared feasible=" << bool_name(doc.feasible) << " does not match\n";
  if (!result.agrees()) return kExitMalformed;
  return result.feasible ? kExitOk : kExitInfeasible;
}

int cmd_gen(const lrst::GenSpec& spec, const std::string& out) {
  const std::string text = lrst::serialize_instance(lrst::gen_random(spec));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kExitOk;
}

int cmd_render(const std::string& file, const std::string& solution, const std::string& out) {
  const lrst::Instance inst = lrst::parse_instance(read_file(file));
  if (solution.empty()) {
    write_file(out, lrst::render_svg(inst, nullptr));
  } else {
    const lrst::Embedding emb = lrst::embedding_from_solution(inst, lrst::parse_solution(read_file(solution)));
    write_file(out, lrst::render_svg(inst, &emb));
  }
  return kExitOk;
}

struct BenchRow {
  std::string file;
  std::string status;
  int vertices = 0;
  lrst::Length start_cost = 0;
  lrst::Length cost = 0;
  std::size_t levels = 0;
  double seconds = 0;
};

BenchRow bench_one(const fs::path& path, lrst::Mode mode) {
  BenchRow row;
  row.file = path.filename().string();
  try {
    const lrst::Instance inst = lrst::parse_instance(read_file(path.string()));
    row.vertices = inst.size();
    lrst::SolveConfig config;
    config.mode = mode;
    const auto started = std::chrono::steady_clock::now();
    const lrst::SolveReport report = lrst::solve(inst, config);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    row.start_cost = report.start_cost;
    row.cost = report.cost;
    row.levels = report.levels.size();
    row.status = report.feasible ? "ok" : "infeasible";
  } catch (const lrst::InfeasibleInstance&) {
    row.status = "infeasible";
  } catch (const std::exception&) {
    row.status = "malformed";
  }
  return row;
}

int cmd_bench(const std::string& dir, const std::string& mode_name) {
  const lrst::Mode mode = lrst::parse_mode(mode_name);
  if (!fs::is_directory(dir)) throw FileError("not a directory: '" + dir + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<BenchRow>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, bench_one, f, mode));

  std::printf("%-32s %-10s %6s %12s %12s %6s %10s\n", "file", "status", "n", "start_cost2", "cost2", "levels",
              "seconds");
  bool all_ok = true;
  for (auto& job : jobs) {
    const BenchRow row = job.get();
    all_ok = all_ok && row.status == "ok";
    std::printf("%-32s %-10s %6d %12lld %12lld %6zu %10.4f\n", row.file.c_str(), row.status.c_str(), row.vertices,
                static_cast<long long>(row.start_cost), static_cast<long long>(row.cost), row.levels, row.seconds);
  }
  return all_ok ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rectilinear Steiner trees with a fixed topology and root-terminal length limits"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", file, "Instance JSON")->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run the scaling solver");
  solve->add_option("file", solve_args.file, "Instance JSON")->required();
  solve->add_option("--mode", solve_args.mode, "strict or practical")
      ->check(CLI::IsMember({"strict", "practical"}))
      ->capture_default_str();
  solve->add_option("--out", solve_args.out, "Write the solution JSON here");
  solve->add_option("--svg", solve_args.svg, "Write an SVG drawing here");
  solve->add_option("--report", solve_args.report, "Write the level diagnostics JSON here");

  std::uint64_t budget = lrst::OracleBudget{}.max_placements;
  std::string out;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum on the half-unit grid (small instances)");
  oracle->add_option("file", file, "Instance JSON")->required();
  oracle->add_option("--budget", budget, "Maximum grid placements")->capture_default_str();
  oracle->add_option("--out", out, "Write the solution JSON here");

  std::string solution;
  auto* check = app.add_subcommand("check", "Recompute cost and feasibility of a solution");
  check->add_option("file", file, "Instance JSON")->required();
  check->add_option("--solution", solution, "Solution JSON")->required();

  lrst::GenSpec spec;
  auto* gen = app.add_subcommand("gen", "Generate a random feasible instance");
  gen->add_option("--terminals", spec.n_terminals, "Number of terminals, root included")->capture_default_str();
  gen->add_option("--range", spec.coord_range, "Coordinates uniform on [-R, R]")->capture_default_str();
  gen->add_option("--restricted-fraction", spec.restricted_fraction, "Share of terminals with a limit")
      ->capture_default_str();
  gen->add_option("--slack", spec.slack, "Limit slack above the root distance")->capture_default_str();
  gen->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* render = app.add_subcommand("render", "Draw an instance or a solution as SVG");
  render->add_option("file", file, "Instance JSON")->required();
  render->add_option("--solution", solution, "Solution JSON");
  render->add_option("--out", out, "SVG output")->required();

  std::string dir;
  std::string bench_mode = "practical";
  auto* bench = app.add_subcommand("bench", "Solve every *.json in a directory concurrently");
  bench->add_option("--dir", dir, "Directory of instances")->required();
  bench->add_option("--mode", bench_mode, "strict or practical")
      ->check(CLI::IsMember({"strict", "practical"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (solve->parsed()) return cmd_solve(solve_args);
    if (oracle->parsed()) return cmd_oracle(file, budget, out);
    if (check->parsed()) return cmd_check(file, solution);
    if (gen->parsed()) return cmd_gen(spec, out);
    if (render->parsed()) return cmd_render(file, solution, out);
    if (bench->parsed()) return cmd_bench(dir, bench_mode);
  } catch (const lrst::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const lrst::ValidationError& e) {
    std::cerr << "invalid instance:\n";
    print_violations(e.report());
    return kExitMalformed;
  } catch (const lrst::InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const lrst::OracleBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
