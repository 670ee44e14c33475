#include "strata/chain_complex.hpp"

namespace strata {

using linalg::Int;
using linalg::Rat;
using linalg::SparseMatQ;
using linalg::SparseMatZ;

bool ChainComplexQ::dd_is_zero() const {
    for (int d = 1; d + 1 <= top_degree(); ++d) {
        SparseMatQ prod = linalg::matmul(boundary[d], boundary[d + 1]);
        if (!prod.entries.empty()) return false;
    }
    return true;
}

std::vector<SparseMatZ> boundary_matrices_int(const SimplicialComplex& k) {
    if (k.empty()) throw InputError("chain complex of empty complex");
    std::vector<SparseMatZ> bd(static_cast<std::size_t>(k.dim()) + 1);
    for (int d = 1; d <= k.dim(); ++d) {
        SparseMatZ m(k.count(d - 1), k.count(d));
        for (std::int32_t j = 0; j < k.count(d); ++j) {
            const Simplex& s = k.simplices(d)[j];
            Simplex face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face[w++] = s[i];
                std::int32_t r = k.index_of(face);
                if (r < 0) throw InternalError("complex is not face-closed");
                m.add(r, j, (drop % 2 == 0) ? Int(1) : Int(-1));
            }
        }
        m.canonicalize();
        bd[d] = std::move(m);
    }
    return bd;
}

ChainComplexQ chain_complex(const SimplicialComplex& k) {
    ChainComplexQ cc;
    auto bd = boundary_matrices_int(k);
    cc.boundary.resize(bd.size());
    for (std::size_t d = 1; d < bd.size(); ++d) cc.boundary[d] = linalg::to_rational(bd[d]);
    cc.basis_size.resize(static_cast<std::size_t>(k.dim()) + 1);
    for (int d = 0; d <= k.dim(); ++d) cc.basis_size[d] = k.count(d);
    return cc;
}

std::vector<std::int32_t> homology_dims(const ChainComplexQ& cc, const linalg::RankOptions& opts) {
    const int top = cc.top_degree();
    std::vector<std::int32_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) ranks[d] = linalg::rank(cc.boundary[d], opts);
    std::vector<std::int32_t> h(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d) h[d] = cc.basis_size[d] - ranks[d] - ranks[d + 1];
    return h;
}

std::vector<std::int32_t> homology_dims(const SimplicialComplex& k,
                                        const linalg::RankOptions& opts) {
    if (k.empty()) throw InputError("homology of empty complex");
    auto bd = boundary_matrices_int(k);
    const int top = k.dim();
    std::vector<std::int32_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) ranks[d] = linalg::rank(bd[d], opts);
    std::vector<std::int32_t> h(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d) h[d] = k.count(d) - ranks[d] - ranks[d + 1];
    return h;
}

} // namespace strata
