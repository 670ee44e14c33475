#pragma once

#include <cstdint>
#include <vector>

#include "strata/linalg/sparse.hpp"

namespace strata::linalg {

/// 26-bit prime used by the modular fast path; products of two residues stay
/// exactly representable in a double.
inline constexpr std::uint32_t kDefaultModPrime = 67108859u; // 2^26 - 5

enum class RankEngine {
    Exact,   ///< sparse fraction-free elimination over the integers (authoritative)
    Modular, ///< rank mod a fixed prime; fast, can only under-report
    Checked, ///< run both, throw MismatchError on disagreement, return the exact rank
};

struct RankOptions {
    RankEngine engine = RankEngine::Exact;
    std::uint32_t prime = kDefaultModPrime;
};

std::int32_t rank(const SparseMatZ& m, const RankOptions& opts = {});
std::int32_t rank(const SparseMatQ& m, const RankOptions& opts = {});

std::int32_t rank_exact(const SparseMatZ& m);

using DenseQ = std::vector<std::vector<Rat>>;

/// In-place reduced row echelon form; pivots are the first nonzero row per
/// column scanning left to right. Returns the pivot columns in order.
std::vector<std::int32_t> rref_dense(DenseQ& m);

/// Deterministic kernel basis (one vector per free column, ascending).
/// Vectors have length m.cols.
std::vector<std::vector<Rat>> kernel_basis(const SparseMatQ& m);

/// Solve b*x = y exactly. Requires b of full column rank with every column of
/// y in the span of b; throws InternalError otherwise. Returns x (b.cols x y.cols).
SparseMatQ solve_in_span(const SparseMatQ& b, const SparseMatQ& y);

} // namespace strata::linalg
