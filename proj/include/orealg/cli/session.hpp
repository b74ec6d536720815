#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orealg/cli/problem.hpp"
#include "orealg/groebner/groebner.hpp"
#include "orealg/verify/verify.hpp"

namespace orealg::cli {

/// Builds sequence oracles over the ground variables from their
/// definitions. Products stop at the first zero factor, so a leading
/// binomial can guard factors that are undefined outside its support.
class OracleTable {
 public:
  explicit OracleTable(std::vector<std::string> ground) : ground_(std::move(ground)) {}
  /// Resolves every name in the body; throws UnknownName or KindError.
  void define(const OracleDecl& d);
  OraclePtr get(const std::string& name) const;
  bool contains(const std::string& name) const { return table_.count(name) > 0; }
  const std::vector<std::string>& ground() const { return ground_; }

 private:
  std::vector<std::string> ground_;
  std::map<std::string, OraclePtr> table_;
};

/// Throws UnknownName or KindError unless e is a valid index expression.
void check_index(const Expr& e, const std::vector<std::string>& ground);
/// Integer value of an index expression over the ground variables.
long eval_index(const Expr& e, const std::vector<std::string>& ground, const Index& at);

struct RunOptions {
  MonomialOrder order = default_order();
  std::optional<unsigned> max_degree;  ///< default for closure and telescope tasks
  std::uint64_t seed = 1;
  unsigned verify_box = 10;            ///< default box 0..N per index
};

struct TaskReport {
  std::string task;
  SourcePos pos;
  bool ok = false;
  std::vector<std::string> lines;
  nlohmann::ordered_json json;
};

struct RunReport {
  std::vector<TaskReport> tasks;
  nlohmann::ordered_json algebra;
  bool ok() const;
};

/// Algebra and declared ideals of a problem file, in declaration order.
struct Declarations {
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, LeftIdeal>> ideals;
};
Declarations load_declarations(const ProblemFile& p);

/// Builds the algebra, ideals and oracles and resolves every task
/// reference without running anything. Throws with line:column positions.
void check_problem(const ProblemFile& p);

/// Runs the tasks in order. Errors inside a task become a failed report.
RunReport run_problem(const ProblemFile& p, const RunOptions& opt);

std::string render_text(const RunReport& r);
/// Versioned JSON document; identical inputs give identical bytes.
std::string render_json(const RunReport& r, const RunOptions& opt);

inline constexpr int kReportVersion = 1;

}  // namespace orealg::cli
