#pragma once

#include <functional>
#include <random>
#include <span>
#include <vector>

#include "orealg/arith/linsolve.hpp"
#include "orealg/telescoping/telescoping.hpp"

namespace orealg::telescoping_detail {

struct RightDivision {
  OrePoly remainder;
  std::vector<OrePoly> quotients;  ///< one per t-generator
};

/// E = remainder + sum_k D_{t_gens[k]} quotients[k], remainder free of the
/// t-generators. Needs invertible sigma on every t-generator.
RightDivision right_divide(const OrePoly& E, const std::vector<std::size_t>& t_gens);

/// A + sum_k D_k certs[k] with D_k = d_k or d_k - 1.
OrePoly attach(const OrePoly& A, const std::vector<std::size_t>& t_gens, const std::vector<OrePoly>& certs,
               CertificateForm form);

/// Makes the telescoper primitive, rescales certificates, builds the
/// witness and checks membership (throws if it fails).
void normalize_and_verify(TelescopingResult& r, const LeftIdeal& I, const MonomialOrder& order);

/// Rows over C(x) obtained by evaluating the t-variables of a parametric
/// system at integer points. Points are added until a full round raises
/// the modular rank no further.
class RowCollector {
 public:
  using RowsAt = std::function<std::vector<SparseRow>(std::span<const Rational>)>;

  RowCollector(std::size_t cols, std::uint32_t t_mask, std::uint64_t seed, RowsAt rows_at);

  /// Adds points until `quiet` consecutive rounds add nothing.
  void saturate(unsigned quiet = 1);
  const std::vector<SparseRow>& rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  bool round();

  std::size_t cols_;
  std::uint32_t t_mask_;
  std::mt19937_64 rng_;
  RowsAt rows_at_;
  ModularEchelon echelon_;
  std::vector<SparseRow> rows_;
};

}  // namespace orealg::telescoping_detail
