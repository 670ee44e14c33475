#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Independent brute-force intersection homology oracle. Everything here is
// re-derived from the definitions with dense rational matrices and the
// test-local Gaussian elimination; the library's allowability tables, sparse
// eliminator and rank shortcut are deliberately not used.

#include <set>

#include "strata/euler.hpp"
#include "strata/gallery.hpp"
#include "test_util.hpp"

using namespace strata;
using testutil::Rat;

namespace {

using Dense = std::vector<std::vector<Rat>>;

// reduced row echelon form, written independently of the library
std::vector<int> oracle_rref(Dense& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t s = pr;
        while (s < rows && m[s][c] == 0) ++s;
        if (s == rows) continue;
        std::swap(m[pr], m[s]);
        Rat inv = Rat(1) / m[pr][c];
        for (auto& x : m[pr]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[pr][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++pr;
    }
    return pivots;
}

int oracle_rank(Dense m) { return static_cast<int>(oracle_rref(m).size()); }

Dense oracle_kernel(const Dense& m, std::size_t cols) {
    Dense work = m;
    if (work.empty()) work.assign(1, std::vector<Rat>(cols, Rat(0)));
    std::vector<int> pivots = oracle_rref(work);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    Dense basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// dense simplicial boundary of the d-simplices, rows = (d-1)-simplices
Dense oracle_boundary(const SimplicialComplex& k, int d) {
    const auto& rows = k.simplices(d - 1);
    const auto& cols = k.simplices(d);
    Dense m(rows.size(), std::vector<Rat>(cols.size(), Rat(0)));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& s = cols[j];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (rows[r] == face) m[r][j] = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

// allowability re-derived from the skeleton definition: a d-simplex is
// allowable iff for every k >= 2 the largest face contained in the closed
// union of strata of dim <= n-k has dimension <= d - k + p_k
std::vector<std::vector<char>> oracle_allowable(const StratifiedSpace& s, const Perversity& p) {
    const SimplicialComplex& k = s.complex();
    const int n = s.n();
    std::vector<std::vector<char>> out(k.dim() + 1);
    for (int d = 0; d <= k.dim(); ++d) {
        out[d].assign(k.count(d), 1);
        for (std::int32_t i = 0; i < k.count(d); ++i) {
            const Simplex& sigma = k.simplices(d)[i];
            for (int kk = 2; kk <= n; ++kk) {
                // max dim of a face of sigma lying in Sigma_{n-kk}
                int best = -1;
                for (int fd = 0; fd <= d; ++fd)
                    for (std::int32_t fi = 0; fi < k.count(fd); ++fi)
                        if (s.stratum_dim(fd, fi) <= n - kk &&
                            is_subset(k.simplices(fd)[fi], sigma))
                            best = std::max(best, fd);
                if (best >= 0 && best > d - kk + p(kk)) out[d][i] = 0;
            }
        }
    }
    return out;
}

// IH dims from first principles: a basis of IC_d (allowable chains whose
// boundary is allowable), the boundary restricted to those bases, then
// homology dimensions by dense ranks.
std::vector<int> oracle_ih(const StratifiedSpace& s, const Perversity& p) {
    const SimplicialComplex& k = s.complex();
    const int top = k.dim();
    auto allow = oracle_allowable(s, p);

    // bases[d]: columns = IC_d basis vectors in full chain coordinates
    std::vector<Dense> bases(top + 1); // bases[d][vec][coord]
    for (int d = 0; d <= top; ++d) {
        std::vector<int> cols;
        for (std::int32_t i = 0; i < k.count(d); ++i)
            if (allow[d][i]) cols.push_back(i);
        Dense constraint; // rows: non-allowable (d-1)-simplices, cols: allowable d-simplices
        if (d > 0) {
            Dense bd = oracle_boundary(k, d);
            for (std::int32_t r = 0; r < k.count(d - 1); ++r) {
                if (allow[d - 1][r]) continue;
                std::vector<Rat> row;
                for (int c : cols) row.push_back(bd[r][c]);
                constraint.push_back(std::move(row));
            }
        }
        Dense kernel = oracle_kernel(constraint, cols.size());
        Dense vecs;
        for (const auto& kv : kernel) {
            std::vector<Rat> v(k.count(d), Rat(0));
            for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = kv[j];
            vecs.push_back(std::move(v));
        }
        bases[d] = std::move(vecs);
    }

    // rank of the boundary map IC_d -> C_{d-1} equals the rank of
    // [boundary * basis_d] since the image automatically lies in IC_{d-1}
    std::vector<int> bd_rank(top + 2, 0);
    for (int d = 1; d <= top; ++d) {
        if (bases[d].empty()) continue;
        Dense bd = oracle_boundary(k, d);
        Dense img; // rows: basis vectors of IC_d, cols: (d-1)-coordinates
        for (const auto& v : bases[d]) {
            std::vector<Rat> w(k.count(d - 1), Rat(0));
            for (std::int32_t r = 0; r < k.count(d - 1); ++r)
                for (std::int32_t c = 0; c < k.count(d); ++c)
                    if (bd[r][c] != 0 && v[c] != 0) w[r] += bd[r][c] * v[c];
            img.push_back(std::move(w));
        }
        bd_rank[d] = oracle_rank(img);
    }

    std::vector<int> dims(s.n() + 1, 0);
    for (int d = 0; d <= top; ++d) {
        // dim ker(boundary|IC_d) = dim IC_d - rank(boundary|IC_d)
        int z = static_cast<int>(bases[d].size()) - bd_rank[d];
        dims[d] = z - bd_rank[d + 1];
    }
    return dims;
}

std::vector<int> as_int(const std::vector<std::int32_t>& v) {
    return std::vector<int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("brute-force oracle agrees with the engine on the pinched torus") {
    StratifiedSpace s = gallery("pinched_torus");
    for (const Perversity& p : standard_perversities(2))
        CHECK(oracle_ih(s, p) == as_int(ih_dims(s, p).dims));
}

TEST_CASE("brute-force oracle agrees with the engine on the suspended torus") {
    StratifiedSpace s = gallery("susp_torus2");
    for (const Perversity& p : standard_perversities(3)) {
        INFO(p.display_name());
        CHECK(oracle_ih(s, p) == as_int(ih_dims(s, p).dims));
    }
}

TEST_CASE("brute-force oracle agrees with the engine on the twice-pinched 3-torus") {
    StratifiedSpace s = gallery("torus3_2p");
    for (const Perversity& p : standard_perversities(3)) {
        INFO(p.display_name());
        CHECK(oracle_ih(s, p) == as_int(ih_dims(s, p).dims));
    }
}

TEST_CASE("brute-force oracle agrees with the engine on a custom perversity") {
    StratifiedSpace s = gallery("susp_torus3_2p");
    const Perversity p = Perversity::make({0, 0, 0}, 4); // zero but spelled custom
    CHECK(oracle_ih(s, p) == as_int(ih_dims(s, p).dims));
}
