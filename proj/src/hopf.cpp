#include "strata/hopf.hpp"

namespace strata {

std::int64_t multiplicity(const StratifiedSpace& s, const Perversity& p,
                          const StratumComponent& comp, const linalg::RankOptions& opts) {
    const int n = s.n();
    if (comp.dim == n) return (n % 2 == 0) ? 1 : -1;
    const int k = comp.dim;
    StratifiedSpace link = normal_link(s, comp);
    IHDims link_ih = ih_dims(link, p.truncated(link.n()), 0, opts);
    std::int64_t m = 0;
    for (int i = n - p(n - k); i <= n; ++i) {
        const int deg = i - k - 1;
        std::int32_t rk =
            (deg >= 0 && deg < static_cast<int>(link_ih.dims.size())) ? link_ih.dims[deg] : 0;
        m += (i % 2 == 0 ? 1 : -1) * rk;
    }
    return m;
}

std::int64_t singular_index(std::int64_t m, std::int64_t classical_index) {
    return m * classical_index;
}

namespace {

const StratumComponent& resolve_component(const std::vector<StratumComponent>& comps,
                                          const ZeroDatum& z) {
    for (const StratumComponent& c : comps)
        if (c.stratum_id == z.stratum_id && c.component == z.component) return c;
    throw InputError("zero '" + z.label + "' references unknown stratum component (stratum " +
                     std::to_string(z.stratum_id) + ", component " + std::to_string(z.component) +
                     ")");
}

} // namespace

PHReport verify_poincare_hopf(const StratifiedSpace& s, const Perversity& p,
                              const std::vector<ZeroDatum>& zeros, int subdivisions,
                              const linalg::RankOptions& opts) {
    PHReport rep;
    rep.perversity = p.display_name();
    rep.ichi = ichi_c_direct(s, p, subdivisions, opts);
    auto comps = stratum_components(s);
    for (const ZeroDatum& z : zeros) {
        const StratumComponent& comp = resolve_component(comps, z);
        if (comp.is_point() && z.index != 1)
            throw InputError("zero '" + z.label +
                             "' sits on a point stratum component, its classical index must "
                             "be 1 (got " +
                             std::to_string(z.index) + ")");
        PHRow row;
        row.zero = z;
        row.chi_c = comp.chi_c;
        row.multiplicity = multiplicity(s, p, comp, opts);
        row.singular_index = singular_index(row.multiplicity, z.index);
        rep.sum += row.singular_index;
        rep.rows.push_back(std::move(row));
    }
    rep.equal = rep.ichi == rep.sum;
    return rep;
}

ConverseResult nonsingular_radial_exists(const StratifiedSpace& s) {
    ConverseResult out;
    out.exists = true;
    for (const StratumComponent& comp : stratum_components(s)) {
        if (comp.chi_c != 0) {
            out.exists = false;
            out.witnesses.push_back(
                ConverseWitness{comp.stratum_id, comp.component, comp.dim, comp.chi_c});
        }
    }
    return out;
}

} // namespace strata
