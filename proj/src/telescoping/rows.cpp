#include "orealg/error.hpp"
#include "telescoping_internal.hpp"

namespace orealg::telescoping_detail {

RowCollector::RowCollector(std::size_t cols, std::uint32_t t_mask, std::uint64_t seed, RowsAt rows_at)
    : cols_(cols), t_mask_(t_mask), rng_(seed), rows_at_(std::move(rows_at)), echelon_(cols, seed ^ 0x5eedULL) {}

bool RowCollector::round() {
  std::uniform_int_distribution<long> dist(-997, 997);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Rational> point(kMaxVars);
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (t_mask_ & (1u << v)) point[v] = Rational(dist(rng_));
    std::vector<SparseRow> rows;
    try {
      rows = rows_at_(point);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DenominatorVanishes) throw;
      continue;
    }
    bool raised = false;
    for (auto& r : rows)
      if (!r.empty() && echelon_.add(r)) {
        rows_.push_back(std::move(r));
        raised = true;
      }
    return raised;
  }
  throw Error(ErrorCode::DenominatorVanishes, "no admissible evaluation point for t");
}

void RowCollector::saturate(unsigned quiet) {
  unsigned idle = 0;
  while (idle < quiet && echelon_.rank() < cols_) idle = round() ? 0 : idle + 1;
}

}  // namespace orealg::telescoping_detail
