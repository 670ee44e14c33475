#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/chain_complex.hpp"
#include "strata/perversity.hpp"
#include "strata/stratified.hpp"

namespace strata {

/// Per degree, which simplices satisfy the allowability inequality
/// dim(sigma n Sigma_{n-k}) <= i - k + p_k for every k >= 2.
struct AllowabilityTable {
    std::vector<std::vector<char>> allowable; // [dim][index]
    std::vector<std::int32_t> counts;         // allowable simplices per degree

    bool is_allowable(int d, std::int32_t i) const { return allowable[d][i] != 0; }
};

AllowabilityTable allowability_table(const StratifiedSpace& s, const Perversity& p);

/// Explicit intersection chain complex: IC_i = allowable i-chains with
/// allowable boundary, realized by a deterministic kernel basis; boundary
/// maps are the restrictions of the simplicial boundary.
ChainComplexQ intersection_chain_complex(const StratifiedSpace& s, const Perversity& p);

struct IHDims {
    std::vector<std::int32_t> dims; // index 0..n
    std::string perversity;
    std::string space;

    std::int64_t euler() const {
        std::int64_t e = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) e += (i % 2 == 0 ? 1 : -1) * dims[i];
        return e;
    }
};

/// Intersection homology dimensions, computed from ranks of restricted
/// boundary matrices (no explicit chain bases); agrees with homology of
/// intersection_chain_complex. The space is subdivided the requested number
/// of times first, labels transported to barycenters.
IHDims ih_dims(const StratifiedSpace& s, const Perversity& p, int subdivisions = 0,
               const linalg::RankOptions& opts = {});

/// Shared-state sibling of ih_dims: builds boundary matrices once per space
/// and caches restricted-rank computations across perversities. Per-degree
/// rank jobs run concurrently; results are deterministic.
class IntersectionEngine {
public:
    IntersectionEngine(const StratifiedSpace& s, int subdivisions = 0,
                       const linalg::RankOptions& opts = {});

    const StratifiedSpace& space() const { return space_; }
    IHDims ih(const Perversity& p);
    std::int64_t euler(const Perversity& p) { return ih(p).euler(); }

private:
    StratifiedSpace space_;
    linalg::RankOptions opts_;
    std::vector<linalg::SparseMatZ> boundary_;
    std::map<std::pair<int, std::vector<std::int32_t>>, std::int32_t> col_rank_cache_;
    std::map<std::tuple<int, std::vector<std::int32_t>, std::vector<std::int32_t>>, std::int32_t>
        sub_rank_cache_;
    std::map<std::vector<int>, IHDims> ih_cache_;
};

/// Stalk cohomology of the Deligne-style intersection complex at a point of a
/// codimension-(n-k) stratum, from the link's intersection homology:
/// H^i = IH_{n-i-k-1}(L) for 0 <= i <= p_{n-k}, else 0. A regular point
/// (k = n) has H^0 = 1 and nothing else.
std::vector<std::int32_t> stalk_cohomology(const std::vector<std::int32_t>& link_ih, int n, int k,
                                           const Perversity& p);

/// Closed-form IH of a suspension: for a base of dimension m and a perversity
/// for dimension m+1, the dims cut at degree m - p_{m+1}.
std::vector<std::int32_t> suspension_ih_oracle(const std::vector<std::int32_t>& base_ih,
                                               const Perversity& p);

/// Closed-form IH of an open cone: base dims survive strictly below the cut
/// m - p_{m+1} and vanish at and above it.
std::vector<std::int32_t> cone_ih_oracle(const std::vector<std::int32_t>& base_ih,
                                         const Perversity& p);

/// Kunneth with a closed-manifold factor: plain convolution with the factor's
/// Betti numbers.
std::vector<std::int32_t> kunneth_manifold_oracle(const std::vector<std::int32_t>& x_ih,
                                                  const std::vector<std::int32_t>& m_betti);

} // namespace strata
