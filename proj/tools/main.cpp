#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "orealg/cli/session.hpp"
#include "orealg/error.hpp"

namespace {

using namespace orealg;
using namespace orealg::cli;

constexpr int kExitTaskFailed = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ore algebra closure, dimension and creative telescoping"};
  app.require_subcommand(1);

  std::string path;
  std::string order = "grevlex";
  std::string format = "text";
  unsigned max_degree = 0;
  std::uint64_t seed = 1;
  unsigned verify_box = 10;

  auto* run = app.add_subcommand("run", "Run every task in a problem file");
  run->add_option("file", path, "Problem file, or - for standard input")->required();
  run->add_option("--order", order, "Monomial order")->check(CLI::IsMember({"grevlex", "grlex"}));
  auto* md = run->add_option("--max-degree", max_degree, "Default degree for closure and telescope tasks");
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--seed", seed, "Seed for randomized evaluation points");
  run->add_option("--verify-box", verify_box, "Default verification box 0..N per index");

  auto* check = app.add_subcommand("check", "Parse and resolve a problem file without running it");
  check->add_option("file", path, "Problem file, or - for standard input")->required();
  bool print = false;
  check->add_flag("--print", print, "Print the file in canonical form");

  CLI11_PARSE(app, argc, argv);

  ProblemFile problem;
  try {
    problem = parse_problem(read_input(path));
    check_problem(problem);
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitInputError;
  }

  if (check->parsed()) {
    if (print) std::cout << print_problem(problem);
    return 0;
  }

  RunOptions opt;
  opt.order.kind = order == "grlex" ? OrderKind::GradedLex : OrderKind::GradedRevLex;
  if (md->count()) opt.max_degree = max_degree;
  opt.seed = seed;
  opt.verify_box = verify_box;
  try {
    RunReport report = run_problem(problem, opt);
    std::cout << (format == "json" ? render_json(report, opt) : render_text(report));
    return report.ok() ? 0 : kExitTaskFailed;
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitInputError;
  }
}
