#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orealg/cli/expr.hpp"

namespace orealg::cli {

/// Source position that does not take part in structural equality.
struct Pos {
  SourcePos at;
  bool operator==(const Pos&) const { return true; }
};

/// Expression handle compared by tree shape.
struct ExprRef {
  ExprPtr e;
  bool operator==(const ExprRef& o) const { return same_structure(*e, *o.e); }
};

struct GeneratorDecl {
  std::string name;
  std::string kind;  ///< catalog name, e.g. shift, diff, qdilation
  std::string var;
  std::optional<std::string> param;  ///< q for the q-kinds
  std::optional<unsigned> base;      ///< Mahler base
  std::optional<ExprRef> point;      ///< divided-difference point
  Pos pos;
  bool operator==(const GeneratorDecl&) const = default;
};

struct AlgebraDecl {
  std::vector<std::string> ground;
  std::vector<std::string> params;
  std::vector<GeneratorDecl> gens;
  Pos pos;
  bool operator==(const AlgebraDecl&) const = default;
};

struct IdealDecl {
  std::string name;
  std::vector<ExprRef> gens;
  Pos pos;
  bool operator==(const IdealDecl&) const = default;
};

/// Integer sequence over the ground variables, built from built-in
/// sequences, other oracles, arithmetic, pow(b, e) and sum(j, lo, hi, body).
struct OracleDecl {
  std::string name;
  ExprRef body;
  Pos pos;
  bool operator==(const OracleDecl&) const = default;
};

struct GbTask {
  std::string ideal;
  Pos pos;
  bool operator==(const GbTask&) const = default;
};

struct DimTask {
  std::string ideal;
  Pos pos;
  bool operator==(const DimTask&) const = default;
};

struct ClosureTask {
  std::string op;  ///< product or sum
  std::vector<std::string> operands;
  std::optional<unsigned> max_degree;
  std::optional<std::string> bind;
  Pos pos;
  bool operator==(const ClosureTask&) const = default;
};

struct GrowthTask {
  std::string ideal;
  std::vector<std::string> over;
  std::optional<unsigned> steps;
  std::optional<std::string> method;  ///< recurrence or probe
  Pos pos;
  bool operator==(const GrowthTask&) const = default;
};

struct TelescopeTask {
  std::string ideal;
  std::vector<std::string> over;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> target_dim;
  /// Coupled ansatz degrees (deg A, deg B); Fasenmyer search when absent.
  std::optional<std::pair<unsigned, unsigned>> zeilberger;
  std::optional<std::string> bind;
  Pos pos;
  bool operator==(const TelescopeTask&) const = default;
};

struct BoxRange {
  std::string var;
  long lo = 0, hi = 0;
  bool operator==(const BoxRange&) const = default;
};

struct Pin {
  std::string var;
  long value = 0;
  bool operator==(const Pin&) const = default;
};

struct VerifyTask {
  std::string summand;
  std::string var;
  ExprRef lo, hi;
  std::string closed_form;
  /// Name bound by a telescope task, or explicit operators.
  std::variant<std::string, std::vector<ExprRef>> by;
  std::vector<BoxRange> box;
  std::vector<Pin> initial;
  Pos pos;
  bool operator==(const VerifyTask&) const = default;
};

using Task = std::variant<GbTask, DimTask, ClosureTask, GrowthTask, TelescopeTask, VerifyTask>;
using Statement = std::variant<IdealDecl, OracleDecl, Task>;

struct ProblemFile {
  AlgebraDecl algebra;
  std::vector<Statement> statements;
  bool operator==(const ProblemFile&) const = default;
};

/// Throws SyntaxError with line:column diagnostics.
ProblemFile parse_problem(std::string_view text);
/// Canonical text; parse(print(p)) == p.
std::string print_problem(const ProblemFile& p);

std::string_view task_name(const Task& t);
Pos task_pos(const Task& t);

}  // namespace orealg::cli
