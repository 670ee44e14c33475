#pragma once

#include <cstdint>

#include "strata/linalg/sparse.hpp"

namespace strata::linalg {

/// Rank of m over Z/p. Runs a sparse elimination phase and finishes densely
/// once the active block is small and filled in; the dense inner loop goes
/// through the dispatched SIMD kernels. Always <= the rational rank.
std::int32_t rank_mod_p(const SparseMatZ& m, std::uint32_t p);

struct ModRankTuning {
    std::size_t dense_max_cells = std::size_t(1) << 24;
    double dense_min_fill = 0.05;
    bool force_dense = false; ///< tests use this to exercise the dense path
};

std::int32_t rank_mod_p(const SparseMatZ& m, std::uint32_t p, const ModRankTuning& tuning);

} // namespace strata::linalg
