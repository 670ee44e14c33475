#include "strata/euler.hpp"

namespace strata {

std::int64_t chi_c_constructible(const std::vector<ConstructibleDatum>& data) {
    std::int64_t total = 0;
    for (const auto& d : data) total += d.chi_c * d.stalk_chi;
    return total;
}

std::int64_t ichi_c_direct(const StratifiedSpace& s, const Perversity& p, int subdivisions,
                           const linalg::RankOptions& opts) {
    return ih_dims(s, p, subdivisions, opts).euler();
}

std::int64_t ichi_c_direct(IntersectionEngine& engine, const Perversity& p) {
    return engine.ih(p).euler();
}

StratumwiseResult ichi_c_stratumwise(const StratifiedSpace& s, const Perversity& p,
                                     const linalg::RankOptions& opts) {
    if (p.n() != s.n()) throw InputError("ichi_c_stratumwise: perversity/space dimension mismatch");
    const int n = s.n();
    const std::int64_t sign_n = (n % 2 == 0) ? 1 : -1;
    StratumwiseResult out;
    for (const StratumComponent& comp : stratum_components(s)) {
        StratumwiseTerm term;
        term.stratum_id = comp.stratum_id;
        term.component = comp.component;
        term.dim = comp.dim;
        term.chi_c = comp.chi_c;
        if (comp.dim == n) {
            // convention rk IH_{-1}(L) = 1: the inner sum collapses to its j=0 term
            term.link_sum = 1;
        } else {
            StratifiedSpace link = normal_link(s, comp);
            IHDims link_ih = ih_dims(link, p.truncated(link.n()), 0, opts);
            const int k = comp.dim;
            std::int64_t inner = 0;
            for (int j = 0; j <= p(n - k); ++j) {
                const int deg = n - j - k - 1;
                std::int32_t rk = (deg >= 0 && deg < static_cast<int>(link_ih.dims.size()))
                                      ? link_ih.dims[deg]
                                      : 0;
                inner += (j % 2 == 0 ? 1 : -1) * rk;
            }
            term.link_sum = inner;
        }
        term.contribution = sign_n * term.chi_c * term.link_sum;
        out.total += term.contribution;
        out.terms.push_back(term);
    }
    return out;
}

std::int64_t ichi_middle_even(const StratifiedSpace& s, const linalg::RankOptions& opts) {
    if (s.n() % 2 != 0)
        throw InputError("ichi_middle_even: space dimension must be even");
    for (const Stratum& st : s.strata())
        if (st.dim % 2 != 0)
            throw InputError("ichi_middle_even: inapplicable, stratum '" + st.name +
                             "' has odd dimension");
    const int n2 = s.n();     // = 2n in the formula
    const int half = n2 / 2;  // n
    const Perversity m = Perversity::standard(Perversity::Standard::LowerMiddle, n2);
    std::int64_t total = 0;
    for (const StratumComponent& comp : stratum_components(s)) {
        const int i = comp.dim / 2; // stratum dimension 2i
        std::int64_t inner;
        if (comp.dim == n2) {
            inner = 1; // rk IH_{-1} convention, as in the general stratumwise sum
        } else {
            StratifiedSpace link = normal_link(s, comp);
            IHDims link_ih = ih_dims(link, m.truncated(link.n()), 0, opts);
            inner = 0;
            for (int j = 0; j <= half - i - 1; ++j) {
                const int deg = n2 - j - 2 * i - 1;
                std::int32_t rk = (deg >= 0 && deg < static_cast<int>(link_ih.dims.size()))
                                      ? link_ih.dims[deg]
                                      : 0;
                inner += (j % 2 == 0 ? 1 : -1) * rk;
            }
        }
        total += comp.chi_c * inner; // (-1)^{2n} = 1; chi_c = chi for even manifolds
    }
    return total;
}

} // namespace strata
