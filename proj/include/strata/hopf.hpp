#pragma once

#include <string>
#include <vector>

#include "strata/euler.hpp"

namespace strata {

/// Symbolic vector-field zero: the stratum component it sits on and the
/// classical index of the field restricted to that stratum. Point components
/// must carry index 1.
struct ZeroDatum {
    int stratum_id = 0;
    int component = 0;
    std::int64_t index = 1;
    std::string label;
};

/// Multiplicity of the space at a point of the component (Def-5.1-style local
/// weight): (-1)^n on regular components, otherwise the truncated alternating
/// sum of link intersection homology ranks.
std::int64_t multiplicity(const StratifiedSpace& s, const Perversity& p,
                          const StratumComponent& comp, const linalg::RankOptions& opts = {});

/// m * Ind(v, x).
std::int64_t singular_index(std::int64_t m, std::int64_t classical_index);

struct PHRow {
    ZeroDatum zero;
    std::int64_t chi_c = 0;
    std::int64_t multiplicity = 0;
    std::int64_t singular_index = 0;
};

struct PHReport {
    std::string perversity;
    std::int64_t ichi = 0;
    std::vector<PHRow> rows;
    std::int64_t sum = 0;
    bool equal = false;
    std::int64_t difference() const { return ichi - sum; }
};

/// Poincare-Hopf verification: compare I-chi (chain level) against the sum of
/// singular indices of the given zeros. Radiality of the field is the
/// caller's trusted declaration; only the formula is checked.
PHReport verify_poincare_hopf(const StratifiedSpace& s, const Perversity& p,
                              const std::vector<ZeroDatum>& zeros, int subdivisions = 0,
                              const linalg::RankOptions& opts = {});

struct ConverseWitness {
    int stratum_id = 0;
    int component = 0;
    int dim = 0;
    std::int64_t chi_c = 0;
};

struct ConverseResult {
    bool exists = false;
    std::vector<ConverseWitness> witnesses; // offending components when !exists
};

/// A nonsingular strongly totally radial field exists iff chi^c vanishes on
/// every stratum component; returns the offending components otherwise.
ConverseResult nonsingular_radial_exists(const StratifiedSpace& s);

} // namespace strata
