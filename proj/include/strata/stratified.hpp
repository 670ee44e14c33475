#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/simplicial.hpp"

namespace strata {

struct Stratum {
    int id = 0;
    int dim = 0;
    std::string name;
};

/// Pseudomanifold candidate: a finite complex with formal dimension n and a
/// total labeling of simplices by strata. Valid instances only leave
/// stratify(); the invariants (total labeling, stratum dimensions, frontier
/// condition) are checked there.
class StratifiedSpace {
public:
    const SimplicialComplex& complex() const { return complex_; }
    int n() const { return n_; }
    const std::vector<Stratum>& strata() const { return strata_; }
    const Stratum& stratum(int id) const;
    bool has_stratum(int id) const;

    int label(int d, std::int32_t index) const { return label_[d][index]; }
    int label(SimplexRef ref) const { return label_[ref.dim][ref.index]; }
    const std::vector<std::vector<int>>& labels() const { return label_; }

    /// dim of the lowest skeleton containing the simplex's stratum.
    int stratum_dim(int d, std::int32_t index) const { return stratum(label(d, index)).dim; }

    /// ids of strata with dim == n (the regular part).
    std::vector<int> top_strata() const;

private:
    friend StratifiedSpace stratify(SimplicialComplex complex,
                                    std::vector<std::vector<int>> labels, int n,
                                    std::vector<Stratum> strata);
    SimplicialComplex complex_;
    int n_ = 0;
    std::vector<Stratum> strata_;
    std::vector<std::vector<int>> label_; // [dim][index] -> stratum id
};

/// Validates and assembles a stratified space. labels[d][i] is the stratum id
/// of the i-th d-simplex. Throws InputError naming the failed invariant
/// (unlabeled simplex, stratum dimension mismatch, frontier violation).
StratifiedSpace stratify(SimplicialComplex complex, std::vector<std::vector<int>> labels, int n,
                         std::vector<Stratum> strata);

/// Convenience: label via a callback (dim, index, simplex) -> stratum id.
template <typename F>
StratifiedSpace stratify_by(SimplicialComplex complex, int n, std::vector<Stratum> strata,
                            F&& classify) {
    std::vector<std::vector<int>> labels(static_cast<std::size_t>(complex.dim()) + 1);
    for (int d = 0; d <= complex.dim(); ++d) {
        labels[d].resize(complex.count(d));
        for (std::int32_t i = 0; i < complex.count(d); ++i)
            labels[d][i] = classify(d, i, complex.simplices(d)[i]);
    }
    return stratify(std::move(complex), std::move(labels), n, std::move(strata));
}

/// Pseudomanifold report: the three axioms checked plus per-stratum data.
struct StratumReport {
    struct PerStratum {
        int id = 0;
        int dim = 0;
        std::string name;
        std::vector<std::int64_t> simplex_counts; // per degree
        std::int64_t chi_c = 0;
        int components = 0;
        bool connected = false;
    };
    bool pure = false;           // every simplex is a face of an n-simplex
    bool two_sided = false;      // every (n-1)-simplex under exactly two n-simplices
    bool codim_ok = false;       // no stratum of dimension n-1
    bool frontier_ok = true;     // guaranteed by stratify, recorded for the report
    bool pseudomanifold() const { return pure && two_sided && codim_ok; }
    std::vector<PerStratum> per_stratum;
};

StratumReport validate_pseudomanifold(const StratifiedSpace& s);

/// Sum of (-1)^dim over the simplices labeled by the stratum.
std::int64_t chi_c_stratum(const StratifiedSpace& s, int stratum_id);

/// Connected component of a stratum: simplices connected through the
/// face/coface relation inside the stratum. Ordered by (stratum id, least
/// simplex), so component indices are stable.
struct StratumComponent {
    int stratum_id = 0;
    int component = 0; // index within the stratum
    int dim = 0;
    std::vector<SimplexRef> simplices; // sorted
    std::int64_t chi_c = 0;
    bool is_point() const { return simplices.size() == 1 && simplices[0].dim == 0; }
};

std::vector<StratumComponent> stratum_components(const StratifiedSpace& s);

/// Normal link at a chosen top-dimensional simplex of a stratum: the usual
/// simplicial link with labels inherited from carriers and stratum dimensions
/// shifted down by dim(stratum)+1. The formal dimension is n - k - 1.
StratifiedSpace normal_link(const StratifiedSpace& s, int stratum_id);
StratifiedSpace normal_link(const StratifiedSpace& s, const StratumComponent& comp);

/// Link at an explicit top simplex of the component's stratum (used by the
/// invariance tests).
StratifiedSpace normal_link_at(const StratifiedSpace& s, SimplexRef top_simplex);

/// Barycentric subdivision with stratum transport: a barycenter inherits the
/// stratum of its simplex, a flag simplex the stratum of its top element.
StratifiedSpace subdivide(const StratifiedSpace& s, int times = 1);

/// Staircase product with the product stratification (stratum of a simplex is
/// the pair of strata of its two projections).
StratifiedSpace product_space(const StratifiedSpace& a, const StratifiedSpace& b);

} // namespace strata
