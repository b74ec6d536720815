#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orealg/arith/ratfunc.hpp"

namespace orealg {

using Vector = std::vector<RatFunc>;
using Matrix = std::vector<Vector>;

/// Sparse row: (column, entry) pairs sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, RatFunc>>;

SparseRow to_sparse(const Vector& row);

/// Incremental row echelon form over Z/p after substituting a random point
/// for every variable. Modular rank never exceeds the true rank, so rows it
/// reports as independent are independent over Q(x).
class ModularEchelon {
 public:
  ModularEchelon(std::size_t cols, std::uint64_t seed);

  /// Returns true if the row raised the modular rank. A row whose entries
  /// cannot be evaluated at the point is conservatively reported independent.
  bool add(const SparseRow& row);
  bool add(const Vector& row) { return add(to_sparse(row)); }
  std::size_t rank() const { return basis_.size(); }

  static constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

 private:
  std::size_t cols_;
  std::vector<std::uint64_t> point_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> basis_;
};

/// Basis of the right nullspace of M over Q(x). Vectors are cleared of
/// denominators, divided by their polynomial content, and scaled so the
/// first nonzero entry has positive integer-primitive leading coefficient.
/// Every vector satisfies Mv = 0 exactly.
std::vector<Vector> nullspace(const Matrix& M, std::uint64_t seed = 1);
std::vector<Vector> nullspace(const std::vector<SparseRow>& rows, std::size_t cols, std::uint64_t seed = 1);

/// Scales v to the canonical representative described above.
Vector normalize_vector(Vector v);

/// Exact check that row . v = 0.
bool row_annihilates(const SparseRow& row, const Vector& v);

}  // namespace orealg
