#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orealg/groebner/groebner.hpp"

namespace orealg {

enum class GrowthMethod { LcmRecurrence, HolonomicLPower, EmpiricalProbe, UserSupplied };
std::string_view to_string(GrowthMethod m);

struct GrowthCertificate {
  GrowthMethod method = GrowthMethod::LcmRecurrence;
  MonomialOrder order;
  std::uint32_t t_mask = 0;
  /// P_0..P_S for the lcm recurrence; empty for the probe.
  std::vector<MPoly> polys;
  /// deg_t of P_s (recurrence) or of the clearing data at step s (probe).
  std::vector<unsigned> degrees;
  /// Fitted exponent; nullopt if no integer exponent explains the degrees.
  std::optional<unsigned> p;
  /// Degrees are bounded (p = 0), so the growth bound does not apply.
  bool degenerate = false;
  bool heuristic = false;
  std::string note;
};

/// Uniform clearing data for a zero-dimensional ideal: for every generator i
/// and every normal-form monomial beta, L * NF(d_i d^beta) has polynomial
/// coefficients of t-degree at most m. Polynomials live in C(x)[t], so
/// t-free factors are units and are dropped.
struct UniformReduction {
  MPoly L;
  unsigned ell = 0;  ///< deg_t L
  unsigned m = 0;
  std::vector<Exponents> gamma;
  struct Entry {
    std::size_t gen;
    Exponents beta;
    OrePoly nf;
  };
  std::vector<Entry> table;
};

/// Field-variable mask of the ground variables named in t.
std::uint32_t field_mask(const OreAlgebra& alg, const std::vector<std::string>& t);

/// Throws NotZeroDimensional or NotDifferenceDifferential.
UniformReduction uniform_reduction_data(const LeftIdeal& I, std::uint32_t t_mask,
                                        const MonomialOrder& order = default_order());

/// P_0 = 1 and P_{s+1} = lcm(P_s, lcm_i(L sigma_i(P_s)), P_s lcm(L, Q_s)), the
/// last part present only with derivation-type generators; Q_s is the
/// squarefree part of P_s. Ideals over Difference generators are first moved
/// to the shift algebra, which has the same growth.
GrowthCertificate growth_recurrence(const LeftIdeal& I, std::uint32_t t_mask, unsigned steps,
                              const MonomialOrder& order = default_order());

struct ProbeOptions {
  MonomialOrder order = default_order();
  std::uint64_t seed = 1;
  bool allow_specialization = true;
};

/// Empirical growth: for s = 0..steps, D_s is the lcm of the t-denominators
/// of NF(d^alpha), |alpha| <= s, and the recorded degree is the largest
/// t-degree among D_s and the numerators of D_s * NF(d^alpha). Variables
/// outside t are specialized to random integers when every generator acting
/// on them is a Shift or Difference.
GrowthCertificate growth_probe(const LeftIdeal& I, std::uint32_t t_mask, unsigned steps, const ProbeOptions& opt = {});

/// Smallest p such that the p-th finite differences of the last half of the
/// sequence are constant; falls back to a rounded log-log slope (flagged).
struct GrowthFit {
  std::optional<unsigned> p;
  bool exact = false;
};
GrowthFit fit_growth_exponent(const std::vector<unsigned>& degrees);

}  // namespace orealg
