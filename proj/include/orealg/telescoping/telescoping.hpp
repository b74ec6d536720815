#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orealg/dimension/dimension.hpp"
#include "orealg/groebner/groebner.hpp"

namespace orealg {

struct TelescopingBound {
  long long bound = 0;
  bool nontrivial = false;
};

/// bound = d + (p - 1) |t|; nontrivial when 0 <= bound < |x|.
TelescopingBound telescoping_bound(unsigned d, unsigned p, unsigned t_count, unsigned x_count);

enum class SearchMethod { Fasenmyer, Zeilberger, Direct };
std::string_view to_string(SearchMethod m);

/// How certificates attach to the telescoper. With Difference, Shift
/// generators S_t enter the witness as (S_t - 1).
enum class CertificateForm { Operator, Difference };
std::string_view to_string(CertificateForm f);

/// A + sum_i D_i Q_i in I, where D_i is the i-th t-generator (or S_i - 1
/// under the Difference form) and A is free of t and of t-generators.
struct TelescopingResult {
  OrePoly telescoper;
  std::vector<std::size_t> t_gens;
  std::vector<OrePoly> certificates;
  CertificateForm form = CertificateForm::Operator;
  SearchMethod method = SearchMethod::Direct;
  unsigned degree = 0;
  OrePoly witness;
  bool verified = false;
};

/// Generators acting on variables in t_mask, in declared order.
std::vector<std::size_t> t_generators(const OreAlgebra& alg, std::uint32_t t_mask);

/// Same field, generators outside t only. Telescopers live here.
AlgebraPtr x_subalgebra(const AlgebraPtr& alg, std::uint32_t t_mask);
/// Moves an operator free of t-generators into x_subalgebra(alg, t_mask).
OrePoly to_x_subalgebra(const OrePoly& f, const AlgebraPtr& sub, std::uint32_t t_mask);

/// Splits a t-free Q in I as R + sum_i D_i Q_i. When R = 0, Q is first
/// multiplied on the left by a product of telescopable witnesses so that a
/// nonzero t-free part appears. Telescopers are made primitive and the
/// witness is membership-checked against I.
/// Throws OutOfDomain (t in Q's coefficients) or NoTelescopableVariable.
TelescopingResult extract_telescoper(const OrePoly& Q, const LeftIdeal& I, std::uint32_t t_mask,
                                     const MonomialOrder& order = default_order());

struct FasenmyerOptions {
  unsigned max_degree = 4;
  /// Stop once the telescopers generate an ideal of at most this dimension;
  /// without a target the search stops at the first productive degree.
  std::optional<unsigned> target_dim;
  MonomialOrder order = default_order();
  std::uint64_t seed = 1;
  std::optional<std::chrono::milliseconds> time_budget;
};

struct FasenmyerOutcome {
  std::vector<TelescopingResult> results;
  /// Dimension of the ideal the telescopers generate in the x-algebra.
  Dimension dimension;
  bool target_met = false;
  bool budget_exhausted = false;
  unsigned degree_reached = 0;
  /// The ideal itself is the unit ideal, so 1 is a t-free member.
  bool trivial = false;
};

/// Searches t-free members of I by increasing total degree.
FasenmyerOutcome fasenmyer_search(const LeftIdeal& I, std::uint32_t t_mask, const FasenmyerOptions& opt = {});

/// Equations NF(A + D_t B) = 0 indexed by normal-form monomials. Each entry
/// multiplies an unknown u, or for B-unknowns sigma_t(u) or delta_t(u).
struct CoupledSystem {
  enum class Op { Identity, Sigma, Delta };
  struct Entry {
    bool is_b;
    std::size_t unknown;
    Op op;
    RatFunc coeff;
  };
  std::vector<Exponents> a_support;
  std::vector<Exponents> b_support;
  std::vector<Exponents> equation_support;
  std::vector<std::vector<Entry>> equations;
  /// Equations 0..square_count-1 are indexed by b_support itself.
  std::size_t square_count = 0;

  std::size_t unknown_count() const { return b_support.size(); }
  std::size_t equation_count() const { return equations.size(); }
  std::size_t constraint_count() const { return equations.size() - square_count; }
};

struct ZeilbergerOptions {
  MonomialOrder order = default_order();
  /// Shift range of denominator factors and excess numerator degree.
  unsigned denom_bound = 0;
  std::uint64_t seed = 1;
};

struct ZeilbergerOutcome {
  CoupledSystem system;
  std::optional<TelescopingResult> result;
  /// Columns of the rational ansatz after instantiating the B unknowns.
  std::size_t ansatz_columns = 0;
};

/// Ansatz A of total degree <= deg_a in the x-generators over C(x), B over
/// the irreducible monomials of degree <= deg_b over C(x, t).
/// Throws MultipleTelescopingVars unless exactly one t-generator exists.
ZeilbergerOutcome zeilberger_search(const LeftIdeal& I, std::uint32_t t_mask, unsigned deg_a, unsigned deg_b,
                                    const ZeilbergerOptions& opt = {});

}  // namespace orealg
