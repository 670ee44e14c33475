#include "strata/intersection.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace strata {

using linalg::Rat;
using linalg::SparseMatQ;
using linalg::SparseMatZ;

AllowabilityTable allowability_table(const StratifiedSpace& s, const Perversity& p) {
    if (p.n() != s.n())
        throw InputError("allowability: perversity dimension " + std::to_string(p.n()) +
                         " does not match space dimension " + std::to_string(s.n()));
    const SimplicialComplex& k = s.complex();
    const int n = s.n();
    AllowabilityTable table;
    table.allowable.resize(static_cast<std::size_t>(k.dim()) + 1);
    table.counts.assign(static_cast<std::size_t>(k.dim()) + 1, 0);
    for (int d = 0; d <= k.dim(); ++d) {
        table.allowable[d].assign(k.count(d), 0);
        for (std::int32_t i = 0; i < k.count(d); ++i) {
            const Simplex& sigma = k.simplices(d)[i];
            // skel_face_dim[c] = max dim of a face whose stratum has codim >= c
            // (codim = n - stratum dim); -1 encodes "no such face"
            std::vector<int> max_face_dim(static_cast<std::size_t>(n) + 1, -1);
            const std::size_t len = sigma.size();
            Simplex face;
            for (std::uint32_t mask = 1; mask < (1u << len); ++mask) {
                face.clear();
                for (std::size_t b = 0; b < len; ++b)
                    if (mask & (1u << b)) face.push_back(sigma[b]);
                const int fd = static_cast<int>(face.size()) - 1;
                const std::int32_t fi = k.index_of(face);
                const int codim = n - s.stratum_dim(fd, fi);
                if (codim >= 0 && codim <= n)
                    max_face_dim[codim] = std::max(max_face_dim[codim], fd);
            }
            // suffix max: faces of codim >= c
            for (int c = n - 1; c >= 0; --c)
                max_face_dim[c] = std::max(max_face_dim[c], max_face_dim[c + 1]);
            bool ok = true;
            for (int c = 2; c <= n && ok; ++c) {
                // -1 means the intersection with that skeleton is empty
                if (max_face_dim[c] >= 0 && max_face_dim[c] > d - c + p(c)) ok = false;
            }
            if (ok) {
                table.allowable[d][i] = 1;
                ++table.counts[d];
            }
        }
    }
    return table;
}

namespace {

std::vector<std::int32_t> indices_where(const std::vector<char>& flags, bool value) {
    std::vector<std::int32_t> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if ((flags[i] != 0) == value) out.push_back(static_cast<std::int32_t>(i));
    return out;
}

void require_pseudomanifold(const StratifiedSpace& s) {
    StratumReport rep = validate_pseudomanifold(s);
    if (!rep.pseudomanifold())
        throw InputError(
            "intersection homology requires a pseudomanifold (purity, two n-simplices "
            "per (n-1)-simplex, singular codimension >= 2)");
}

} // namespace

ChainComplexQ intersection_chain_complex(const StratifiedSpace& s, const Perversity& p) {
    require_pseudomanifold(s);
    const SimplicialComplex& k = s.complex();
    const int top = k.dim();
    AllowabilityTable table = allowability_table(s, p);
    auto bd = boundary_matrices_int(k);

    // Basis of IC_d: kernel of (project to non-allowable rows) . boundary on
    // the allowable columns. Columns of basis[d] are chains in the coordinates
    // of the full simplicial C_d.
    std::vector<SparseMatQ> basis(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::int32_t>> allow_idx(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        allow_idx[d] = indices_where(table.allowable[d], true);
        const auto& cols = allow_idx[d];
        std::vector<std::vector<Rat>> kernel;
        if (d == 0) {
            kernel.assign(cols.size(), {});
            for (std::size_t j = 0; j < cols.size(); ++j) {
                kernel[j].assign(cols.size(), Rat(0));
                kernel[j][j] = 1;
            }
        } else {
            std::vector<std::int32_t> bad_rows = indices_where(table.allowable[d - 1], false);
            SparseMatZ sub = bd[d].select(bad_rows, cols);
            kernel = linalg::kernel_basis(linalg::to_rational(sub));
        }
        SparseMatQ b(k.count(d), static_cast<std::int32_t>(kernel.size()));
        for (std::size_t j = 0; j < kernel.size(); ++j)
            for (std::size_t r = 0; r < kernel[j].size(); ++r)
                if (kernel[j][r] != 0)
                    b.add(cols[r], static_cast<std::int32_t>(j), kernel[j][r]);
        b.canonicalize();
        basis[d] = std::move(b);
    }

    ChainComplexQ cc;
    cc.basis_size.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) cc.basis_size[d] = basis[d].cols;
    cc.boundary.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 1; d <= top; ++d) {
        SparseMatQ img = linalg::matmul(linalg::to_rational(bd[d]), basis[d]);
        cc.boundary[d] = linalg::solve_in_span(basis[d - 1], img);
    }
    return cc;
}

// dim IH_i = a_i - r_i - r_{i+1} + s_{i+1} with
//   a_i = #allowable i-simplices
//   r_i = rank of boundary_i restricted to allowable columns
//   s_i = rank of boundary_i restricted to allowable columns and
//         non-allowable rows (the obstruction part).
// This is homology of the allowable-chains-with-allowable-boundary complex:
// cycles meeting IC_i are Z_i n A_i (dimension a_i - r_i) and the boundaries
// coming from IC_{i+1} have dimension dim IC_{i+1} - dim(Z_{i+1} n A_{i+1})
// = (a_{i+1} - s_{i+1}) - (a_{i+1} - r_{i+1}).

IntersectionEngine::IntersectionEngine(const StratifiedSpace& s, int subdivisions,
                                       const linalg::RankOptions& opts)
    : space_(subdivide(s, subdivisions)), opts_(opts) {
    require_pseudomanifold(space_);
    boundary_ = boundary_matrices_int(space_.complex());
}

IHDims IntersectionEngine::ih(const Perversity& p) {
    if (p.n() != space_.n())
        throw InputError("ih_dims: perversity dimension does not match the space");
    auto cached = ih_cache_.find(p.values());
    if (cached != ih_cache_.end()) return cached->second;

    const int top = space_.complex().dim();
    AllowabilityTable table = allowability_table(space_, p);
    std::vector<std::vector<std::int32_t>> allow(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::int32_t>> nonallow(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        allow[d] = indices_where(table.allowable[d], true);
        nonallow[d] = indices_where(table.allowable[d], false);
    }

    // collect the rank computations this perversity still needs
    struct Task {
        std::pair<int, std::vector<std::int32_t>> col_key;
        std::tuple<int, std::vector<std::int32_t>, std::vector<std::int32_t>> sub_key;
        bool row_restricted = false;
        SparseMatZ matrix;
        std::int32_t result = 0;
    };
    std::vector<Task> tasks;
    for (int d = 1; d <= top; ++d) {
        if (!col_rank_cache_.count({d, allow[d]})) {
            Task t;
            t.col_key = {d, allow[d]};
            t.row_restricted = false;
            t.matrix = boundary_[d].select_columns(allow[d]);
            tasks.push_back(std::move(t));
        }
        if (!sub_rank_cache_.count({d, nonallow[d - 1], allow[d]})) {
            Task t;
            t.sub_key = {d, nonallow[d - 1], allow[d]};
            t.row_restricted = true;
            t.matrix = boundary_[d].select(nonallow[d - 1], allow[d]);
            tasks.push_back(std::move(t));
        }
    }
    // run independent rank jobs concurrently; each writes its own slot
    {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                tasks[i].result = linalg::rank(tasks[i].matrix, opts_);
            }
        };
        unsigned nthreads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                               static_cast<unsigned>(tasks.size()));
        if (nthreads > 1) {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        } else {
            worker();
        }
    }
    for (Task& t : tasks) {
        if (t.row_restricted)
            sub_rank_cache_[t.sub_key] = t.result;
        else
            col_rank_cache_[t.col_key] = t.result;
    }

    auto r = [&](int d) -> std::int32_t {
        if (d < 1 || d > top) return 0;
        return col_rank_cache_.at({d, allow[d]});
    };
    auto sub = [&](int d) -> std::int32_t {
        if (d < 1 || d > top) return 0;
        return sub_rank_cache_.at({d, nonallow[d - 1], allow[d]});
    };

    IHDims out;
    out.dims.assign(static_cast<std::size_t>(space_.n()) + 1, 0);
    for (int i = 0; i <= space_.n(); ++i) {
        if (i > top) break;
        std::int32_t a = static_cast<std::int32_t>(allow[i].size());
        out.dims[i] = a - r(i) - r(i + 1) + sub(i + 1);
    }
    out.perversity = p.display_name();
    ih_cache_[p.values()] = out;
    return out;
}

IHDims ih_dims(const StratifiedSpace& s, const Perversity& p, int subdivisions,
               const linalg::RankOptions& opts) {
    IntersectionEngine engine(s, subdivisions, opts);
    return engine.ih(p);
}

std::vector<std::int32_t> stalk_cohomology(const std::vector<std::int32_t>& link_ih, int n, int k,
                                           const Perversity& p) {
    std::vector<std::int32_t> h(static_cast<std::size_t>(std::max(n, 1)), 0);
    if (k == n) {
        h[0] = 1;
        return h;
    }
    if (k > n || k < 0) throw InputError("stalk_cohomology: stratum dimension out of range");
    const int link_dim = n - k - 1;
    if (static_cast<int>(link_ih.size()) != link_dim + 1)
        throw InputError("stalk_cohomology: link dims have wrong length for an (n-k-1)-link");
    for (int i = 0; i <= p(n - k) && i < static_cast<int>(h.size()); ++i) {
        const int deg = n - i - k - 1;
        if (deg >= 0 && deg < static_cast<int>(link_ih.size())) h[i] = link_ih[deg];
    }
    return h;
}

std::vector<std::int32_t> suspension_ih_oracle(const std::vector<std::int32_t>& base_ih,
                                               const Perversity& p) {
    const int m = static_cast<int>(base_ih.size()) - 1;
    if (p.n() != m + 1)
        throw InputError("suspension oracle: perversity must be for dimension m+1");
    const int cut = m - p(m + 1);
    std::vector<std::int32_t> dims(static_cast<std::size_t>(m) + 2, 0);
    for (int i = 0; i <= m + 1; ++i) {
        if (i > cut)
            dims[i] = base_ih[i - 1];
        else if (i < cut)
            dims[i] = base_ih[i];
    }
    return dims;
}

std::vector<std::int32_t> cone_ih_oracle(const std::vector<std::int32_t>& base_ih,
                                         const Perversity& p) {
    const int m = static_cast<int>(base_ih.size()) - 1;
    if (p.n() != m + 1) throw InputError("cone oracle: perversity must be for dimension m+1");
    const int cut = m - p(m + 1);
    std::vector<std::int32_t> dims(static_cast<std::size_t>(m) + 2, 0);
    for (int i = 0; i < cut; ++i) dims[i] = base_ih[i];
    return dims;
}

std::vector<std::int32_t> kunneth_manifold_oracle(const std::vector<std::int32_t>& x_ih,
                                                  const std::vector<std::int32_t>& m_betti) {
    std::vector<std::int32_t> out(x_ih.size() + m_betti.size() - 1, 0);
    for (std::size_t i = 0; i < x_ih.size(); ++i)
        for (std::size_t j = 0; j < m_betti.size(); ++j) out[i + j] += x_ih[i] * m_betti[j];
    return out;
}

} // namespace strata
