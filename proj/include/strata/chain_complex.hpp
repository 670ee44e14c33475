#pragma once

#include <vector>

#include "strata/linalg/elimination.hpp"
#include "strata/linalg/sparse.hpp"
#include "strata/simplicial.hpp"

namespace strata {

/// Chain complex over Q. boundary[d] maps degree-d chains to degree-(d-1)
/// chains for d in 1..top_degree(); boundary[0] is an empty placeholder.
struct ChainComplexQ {
    std::vector<linalg::SparseMatQ> boundary;
    std::vector<std::int32_t> basis_size; // per degree 0..top

    int top_degree() const { return static_cast<int>(basis_size.size()) - 1; }
    bool dd_is_zero() const; // exact check of boundary_d . boundary_{d+1} = 0
};

/// Simplicial boundary with alternating signs on sorted vertex tuples; rows
/// and columns follow the complex's lexicographic simplex order.
ChainComplexQ chain_complex(const SimplicialComplex& k);

/// Integer boundary matrices of the simplicial chain complex (same layout).
std::vector<linalg::SparseMatZ> boundary_matrices_int(const SimplicialComplex& k);

/// dim H_d = #d-cells - rank d_d - rank d_{d+1}, exact ranks.
std::vector<std::int32_t> homology_dims(const ChainComplexQ& cc,
                                        const linalg::RankOptions& opts = {});
std::vector<std::int32_t> homology_dims(const SimplicialComplex& k,
                                        const linalg::RankOptions& opts = {});

} // namespace strata
