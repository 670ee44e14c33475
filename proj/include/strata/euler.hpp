#pragma once

#include <vector>

#include "strata/intersection.hpp"

namespace strata {

/// One connected stratum component's contribution data: its compactly
/// supported Euler characteristic and the Euler characteristic of the stalk
/// complex along it.
struct ConstructibleDatum {
    std::int64_t chi_c = 0;
    std::int64_t stalk_chi = 0;
};

/// chi^c(A; F) = sum over components of chi^c(X_i) * chi(stalk_i).
std::int64_t chi_c_constructible(const std::vector<ConstructibleDatum>& data);

/// I-chi as the alternating sum of the chain-level intersection homology
/// dimensions.
std::int64_t ichi_c_direct(const StratifiedSpace& s, const Perversity& p, int subdivisions = 0,
                           const linalg::RankOptions& opts = {});
std::int64_t ichi_c_direct(IntersectionEngine& engine, const Perversity& p);

/// Stratumwise evaluation: sum over connected components X_i of
/// (-1)^n chi^c(X_i) sum_{j=0}^{p_{n-dim X_i}} (-1)^j rk IH_{n-j-dim X_i-1}(L_i),
/// with the convention rk IH_{-1}(L) = 1 for top-dimensional components.
struct StratumwiseTerm {
    int stratum_id = 0;
    int component = 0;
    int dim = 0;
    std::int64_t chi_c = 0;
    std::int64_t link_sum = 0;     // the inner alternating sum
    std::int64_t contribution = 0; // (-1)^n chi_c * link_sum
};

struct StratumwiseResult {
    std::int64_t total = 0;
    std::vector<StratumwiseTerm> terms;
};

StratumwiseResult ichi_c_stratumwise(const StratifiedSpace& s, const Perversity& p,
                                     const linalg::RankOptions& opts = {});

/// Even-dimensional middle-perversity specialization: the double sum over
/// even strata with the lower-middle perversity. Throws InputError when the
/// space or one of its strata has odd dimension.
std::int64_t ichi_middle_even(const StratifiedSpace& s, const linalg::RankOptions& opts = {});

} // namespace strata
