#pragma once

// Shared helpers for the test suites. brute_rank is the independent oracle:
// a textbook dense Gaussian elimination over Q, written without touching the
// library's elimination code.

#include <random>
#include <vector>

#include "strata/linalg/sparse.hpp"
#include "strata/simplicial.hpp"

namespace testutil {

using strata::linalg::Rat;
using strata::linalg::SparseMatQ;
using strata::linalg::SparseMatZ;

inline int brute_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline int brute_rank(const SparseMatZ& m) {
    std::vector<std::vector<Rat>> d(static_cast<std::size_t>(m.rows),
                                    std::vector<Rat>(static_cast<std::size_t>(m.cols), Rat(0)));
    for (const auto& e : m.entries) d[e.row][e.col] += Rat(e.value);
    return brute_rank(std::move(d));
}

inline SparseMatZ random_sparse(std::mt19937& rng, int rows, int cols, double density,
                                int max_abs = 4) {
    SparseMatZ m(rows, cols);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-max_abs, max_abs);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < density) {
                int v = val(rng);
                if (v != 0) m.add(r, c, strata::linalg::Int(v));
            }
    m.canonicalize();
    return m;
}

/// Random small complex: face closure of a handful of random tuples.
inline strata::SimplicialComplex random_complex(std::mt19937& rng, int nverts = 7,
                                                int nmax = 5, int max_card = 4) {
    std::uniform_int_distribution<int> nv(1, max_card);
    std::uniform_int_distribution<int> vid(0, nverts - 1);
    std::vector<strata::Simplex> maximal;
    for (int i = 0; i < nmax; ++i) {
        std::set<strata::VertexId> verts;
        int card = nv(rng);
        while (static_cast<int>(verts.size()) < card) verts.insert(vid(rng));
        maximal.push_back(strata::Simplex(verts.begin(), verts.end()));
    }
    return strata::build_complex(maximal);
}

} // namespace testutil
