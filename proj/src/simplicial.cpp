#include "strata/simplicial.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

std::size_t SimplicialComplex::total_simplices() const {
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> kEmpty;
    if (d < 0 || d > dim()) return kEmpty;
    return by_dim_[d];
}

std::int32_t SimplicialComplex::index_of(const Simplex& s) const {
    require_finalized();
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> f;
    f.reserve(by_dim_.size());
    for (const auto& v : by_dim_) f.push_back(static_cast<std::int64_t>(v.size()));
    return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (int d = 0; d <= dim(); ++d)
        chi += static_cast<std::int64_t>(d % 2 == 0 ? 1 : -1) * count(d);
    return chi;
}

VertexId SimplicialComplex::max_vertex_id() const {
    VertexId m = -1;
    if (!empty())
        for (const Simplex& s : by_dim_[0]) m = std::max(m, s[0]);
    return m;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    require_finalized();
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        // a d-simplex is maximal iff it is not a facet of any (d+1)-simplex
        std::vector<char> is_facet(by_dim_[d].size(), 0);
        if (d < dim()) {
            for (const Simplex& t : by_dim_[d + 1]) {
                Simplex facet(t.size() - 1);
                for (std::size_t drop = 0; drop < t.size(); ++drop) {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i < t.size(); ++i)
                        if (i != drop) facet[w++] = t[i];
                    std::int32_t idx = index_of(facet);
                    if (idx >= 0) is_facet[idx] = 1;
                }
            }
        }
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
            if (!is_facet[i]) out.push_back(by_dim_[d][i]);
    }
    return out;
}

void SimplicialComplex::insert_with_faces(Simplex s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("malformed simplex: repeated vertex in tuple");
    if (s.empty()) throw InputError("malformed simplex: empty tuple");
    if (s.size() > 24)
        throw InputError("simplex with more than 24 vertices is not supported");
    // enumerate all nonempty subsets
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        insert_raw(std::move(face));
    }
}

bool SimplicialComplex::insert_raw(Simplex s) {
    const int d = static_cast<int>(s.size()) - 1;
    if (d < 0) throw InputError("malformed simplex: empty tuple");
    if (static_cast<int>(by_dim_.size()) <= d) by_dim_.resize(d + 1);
    auto [it, inserted] = index_.try_emplace(s, -1);
    if (!inserted) return false;
    by_dim_[d].push_back(std::move(s));
    finalized_ = false;
    return true;
}

void SimplicialComplex::finalize() {
    for (auto& v : by_dim_) std::sort(v.begin(), v.end());
    index_.clear();
    for (const auto& v : by_dim_)
        for (std::size_t i = 0; i < v.size(); ++i) index_[v[i]] = static_cast<std::int32_t>(i);
    finalized_ = true;
}

void SimplicialComplex::require_finalized() const {
    if (!finalized_) throw InternalError("complex used before finalize()");
}

SimplicialComplex build_complex(const std::vector<Simplex>& maximal) {
    SimplicialComplex k;
    for (const Simplex& s : maximal) {
        for (VertexId v : s)
            if (v < 0) throw InputError("malformed simplex: negative vertex id");
        k.insert_with_faces(s);
    }
    k.finalize();
    return k;
}

SimplicialComplex cone(const SimplicialComplex& k) {
    if (k.empty()) throw InputError("cone of empty complex");
    const VertexId apex = k.max_vertex_id() + 1;
    SimplicialComplex out;
    out.insert_raw({apex});
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.simplices(d)) {
            out.insert_raw(s);
            Simplex t = s;
            t.push_back(apex);
            out.insert_raw(std::move(t));
        }
    }
    out.finalize();
    return out;
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    if (k.empty()) throw InputError("suspension of empty complex");
    const VertexId north = k.max_vertex_id() + 1;
    const VertexId south = north + 1;
    SimplicialComplex out;
    out.insert_raw({north});
    out.insert_raw({south});
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.simplices(d)) {
            out.insert_raw(s);
            Simplex t = s;
            t.push_back(north);
            out.insert_raw(t);
            t.back() = south;
            out.insert_raw(std::move(t));
        }
    }
    out.finalize();
    return out;
}

VertexId product_vertex_id(VertexId a, VertexId b, VertexId stride) { return a * stride + b; }

namespace {

// Emit all monotone staircase paths through the (p+1)x(q+1) grid of sigma x tau.
void staircases(const Simplex& sigma, const Simplex& tau, VertexId stride,
                std::vector<Simplex>& out) {
    const std::size_t p = sigma.size() - 1;
    const std::size_t q = tau.size() - 1;
    Simplex path;
    path.reserve(p + q + 1);
    auto walk = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        path.push_back(product_vertex_id(sigma[i], tau[j], stride));
        if (i == p && j == q) {
            out.push_back(path);
        } else {
            if (i < p) self(self, i + 1, j);
            if (j < q) self(self, i, j + 1);
        }
        path.pop_back();
    };
    walk(walk, 0, 0);
}

} // namespace

SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.empty() || l.empty()) throw InputError("product of empty complex");
    const VertexId stride = l.max_vertex_id() + 1;
    std::vector<Simplex> tops;
    for (const Simplex& sigma : k.maximal_simplices())
        for (const Simplex& tau : l.maximal_simplices()) staircases(sigma, tau, stride, tops);
    SimplicialComplex out;
    for (Simplex& t : tops) out.insert_with_faces(std::move(t));
    out.finalize();
    return out;
}

SimplicialComplex quotient_vertices(const SimplicialComplex& k,
                                    const std::vector<std::vector<VertexId>>& identify) {
    if (k.empty()) throw InputError("quotient of empty complex");
    std::unordered_map<VertexId, VertexId> rep;
    for (const auto& group : identify) {
        if (group.empty()) continue;
        VertexId m = *std::min_element(group.begin(), group.end());
        for (VertexId v : group) {
            auto [it, inserted] = rep.try_emplace(v, m);
            if (!inserted && it->second != m)
                throw InputError("quotient groups overlap on vertex " + std::to_string(v));
        }
    }
    auto map_vertex = [&](VertexId v) {
        auto it = rep.find(v);
        return it == rep.end() ? v : it->second;
    };
    SimplicialComplex out;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.simplices(d)) {
            Simplex img;
            img.reserve(s.size());
            for (VertexId v : s) img.push_back(map_vertex(v));
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end())
                throw InputError(
                    "quotient is not simplicial: a simplex degenerates under the "
                    "identification; subdivide first");
            // vertices inside one identification group are meant to merge;
            // a shared image in dimension >= 1 glues open cells and is refused
            bool fresh = out.insert_raw(std::move(img));
            if (!fresh && d >= 1)
                throw InputError(
                    "quotient is not simplicial: two simplices share the same image; "
                    "subdivide first");
        }
    }
    out.finalize();
    return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l) {
    const VertexId shift = k.max_vertex_id() + 1;
    SimplicialComplex out;
    for (int d = 0; d <= k.dim(); ++d)
        for (const Simplex& s : k.simplices(d)) out.insert_raw(s);
    for (int d = 0; d <= l.dim(); ++d) {
        for (const Simplex& s : l.simplices(d)) {
            Simplex t = s;
            for (VertexId& v : t) v += shift;
            out.insert_raw(std::move(t));
        }
    }
    out.finalize();
    return out;
}

Subdivision barycentric_subdivision_tracked(const SimplicialComplex& k) {
    if (k.empty()) throw InputError("subdivision of empty complex");
    Subdivision sd;
    // barycenter ids in (dim, lex index) order
    std::vector<std::vector<VertexId>> bary_id(k.dim() + 1);
    VertexId next = 0;
    for (int d = 0; d <= k.dim(); ++d) {
        bary_id[d].resize(k.count(d));
        for (std::int32_t i = 0; i < k.count(d); ++i) {
            bary_id[d][i] = next++;
            sd.vertex_carrier.push_back(SimplexRef{d, i});
        }
    }
    // Every simplex of the subdivision is a chain in the face poset. Each
    // chain has a unique top element, so a DFS downward over proper faces,
    // rooted at every simplex, emits each chain exactly once. The stack holds
    // ids in descending order; reverse before insertion.
    std::vector<VertexId> down;
    auto walk_down = [&](auto&& self, int d, std::int32_t i) -> void {
        down.push_back(bary_id[d][i]);
        Simplex chain_sorted(down.rbegin(), down.rend());
        sd.complex.insert_raw(std::move(chain_sorted));
        const Simplex& s = k.simplices(d)[i];
        if (d > 0) {
            const std::size_t n = s.size();
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                if (mask == (1u << n) - 1) continue; // proper faces only
                Simplex face;
                for (std::size_t b = 0; b < n; ++b)
                    if (mask & (1u << b)) face.push_back(s[b]);
                const int fd = static_cast<int>(face.size()) - 1;
                const std::int32_t fi = k.index_of(face);
                self(self, fd, fi);
            }
        }
        down.pop_back();
    };
    for (int d = 0; d <= k.dim(); ++d)
        for (std::int32_t i = 0; i < k.count(d); ++i) walk_down(walk_down, d, i);
    sd.complex.finalize();
    return sd;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    return barycentric_subdivision_tracked(k).complex;
}

} // namespace strata
