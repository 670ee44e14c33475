#include "strata/stratified.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace strata {

const Stratum& StratifiedSpace::stratum(int id) const {
    for (const Stratum& s : strata_)
        if (s.id == id) return s;
    throw InputError("unknown stratum id " + std::to_string(id));
}

bool StratifiedSpace::has_stratum(int id) const {
    for (const Stratum& s : strata_)
        if (s.id == id) return true;
    return false;
}

std::vector<int> StratifiedSpace::top_strata() const {
    std::vector<int> out;
    for (const Stratum& s : strata_)
        if (s.dim == n_) out.push_back(s.id);
    return out;
}

namespace {

// all faces of s present in k, as refs (including s itself)
std::vector<SimplexRef> faces_of(const SimplicialComplex& k, const Simplex& s) {
    std::vector<SimplexRef> out;
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        int d = static_cast<int>(face.size()) - 1;
        std::int32_t idx = k.index_of(face);
        if (idx < 0) throw InternalError("complex is not face-closed");
        out.push_back(SimplexRef{d, idx});
    }
    return out;
}

} // namespace

StratifiedSpace stratify(SimplicialComplex complex, std::vector<std::vector<int>> labels, int n,
                         std::vector<Stratum> strata) {
    if (complex.empty()) throw InputError("stratify: empty complex");
    if (complex.dim() != n)
        throw InputError("stratify: formal dimension " + std::to_string(n) +
                         " does not match complex dimension " + std::to_string(complex.dim()));
    std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
        return a.id < b.id;
    });
    for (std::size_t i = 0; i + 1 < strata.size(); ++i)
        if (strata[i].id == strata[i + 1].id)
            throw InputError("stratify: duplicate stratum id " + std::to_string(strata[i].id));
    auto stratum_by_id = [&](int id) -> const Stratum* {
        for (const Stratum& s : strata)
            if (s.id == id) return &s;
        return nullptr;
    };

    // total labeling with known ids
    if (static_cast<int>(labels.size()) != complex.dim() + 1)
        throw InputError("stratify: unlabeled simplex (label table has wrong shape)");
    for (int d = 0; d <= complex.dim(); ++d) {
        if (static_cast<std::int32_t>(labels[d].size()) != complex.count(d))
            throw InputError("stratify: unlabeled simplex in dimension " + std::to_string(d));
        for (int id : labels[d])
            if (!stratum_by_id(id))
                throw InputError("stratify: label uses unknown stratum id " + std::to_string(id));
    }

    // stratum dimension = max dimension of its simplices; must match the declaration
    std::map<int, int> max_dim;
    std::map<int, bool> seen;
    for (int d = 0; d <= complex.dim(); ++d)
        for (int id : labels[d]) {
            seen[id] = true;
            auto [it, ins] = max_dim.try_emplace(id, d);
            if (!ins) it->second = std::max(it->second, d);
        }
    for (const Stratum& s : strata) {
        if (!seen.count(s.id))
            throw InputError("stratify: stratum '" + s.name + "' (id " + std::to_string(s.id) +
                             ") labels no simplex");
        if (max_dim[s.id] != s.dim)
            throw InputError("stratify: stratum '" + s.name + "' declared dim " +
                             std::to_string(s.dim) + " but its simplices have max dim " +
                             std::to_string(max_dim[s.id]));
        if (s.dim > n) throw InputError("stratify: stratum dimension exceeds formal dimension");
    }

    // frontier condition: if some simplex of stratum Y is a face of a simplex
    // of stratum X != Y, then every simplex of Y must be one.
    std::vector<int> ids;
    for (const Stratum& s : strata) ids.push_back(s.id);
    std::map<int, std::vector<std::vector<char>>> closure_mark;
    for (int id : ids) {
        auto& mark = closure_mark[id];
        mark.resize(static_cast<std::size_t>(complex.dim()) + 1);
        for (int d = 0; d <= complex.dim(); ++d) mark[d].assign(complex.count(d), 0);
    }
    for (int d = 0; d <= complex.dim(); ++d) {
        for (std::int32_t i = 0; i < complex.count(d); ++i) {
            int x = labels[d][i];
            for (const SimplexRef& f : faces_of(complex, complex.simplices(d)[i]))
                closure_mark[x][f.dim][f.index] = 1;
        }
    }
    for (int x : ids) {
        const auto& mark = closure_mark[x];
        std::map<int, std::pair<std::int64_t, std::int64_t>> hit; // y -> (in closure, total)
        for (int d = 0; d <= complex.dim(); ++d)
            for (std::int32_t i = 0; i < complex.count(d); ++i) {
                int y = labels[d][i];
                auto& [in, tot] = hit[y];
                ++tot;
                if (mark[d][i]) ++in;
            }
        for (const auto& [y, counts] : hit) {
            if (y == x) continue;
            const auto& [in, tot] = counts;
            if (in > 0 && in != tot) {
                const auto* sx = stratum_by_id(x);
                const auto* sy = stratum_by_id(y);
                throw InputError("stratify: frontier condition fails between strata '" +
                                 sx->name + "' and '" + sy->name + "': the closure of '" +
                                 sx->name + "' meets '" + sy->name + "' without containing it");
            }
        }
    }

    StratifiedSpace out;
    out.complex_ = std::move(complex);
    out.n_ = n;
    out.strata_ = std::move(strata);
    out.label_ = std::move(labels);
    return out;
}

StratumReport validate_pseudomanifold(const StratifiedSpace& s) {
    const SimplicialComplex& k = s.complex();
    const int n = s.n();
    StratumReport rep;

    // (a) purity: every simplex is a face of an n-simplex
    {
        std::vector<std::vector<char>> under(static_cast<std::size_t>(n) + 1);
        for (int d = 0; d <= n; ++d) under[d].assign(k.count(d), 0);
        for (std::int32_t i = 0; i < k.count(n); ++i)
            for (const SimplexRef& f : faces_of(k, k.simplices(n)[i])) under[f.dim][f.index] = 1;
        rep.pure = true;
        for (int d = 0; d < n && rep.pure; ++d)
            for (std::int32_t i = 0; i < k.count(d); ++i)
                if (!under[d][i]) {
                    rep.pure = false;
                    break;
                }
        if (k.count(n) == 0) rep.pure = false;
    }

    // (b) every (n-1)-simplex is a face of exactly two n-simplices
    {
        std::vector<int> cofaces(k.count(n - 1), 0);
        for (std::int32_t i = 0; i < k.count(n); ++i) {
            const Simplex& t = k.simplices(n)[i];
            Simplex facet(t.size() - 1);
            for (std::size_t drop = 0; drop < t.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (j != drop) facet[w++] = t[j];
                std::int32_t idx = k.index_of(facet);
                if (idx >= 0) ++cofaces[idx];
            }
        }
        rep.two_sided = n >= 1;
        for (int c : cofaces)
            if (c != 2) rep.two_sided = false;
        if (n == 0) rep.two_sided = true; // nothing to check
    }

    // (c) singular strata have codimension >= 2
    rep.codim_ok = true;
    for (const Stratum& st : s.strata())
        if (st.dim == n - 1) rep.codim_ok = false;

    rep.frontier_ok = true; // enforced by stratify

    auto comps = stratum_components(s);
    for (const Stratum& st : s.strata()) {
        StratumReport::PerStratum ps;
        ps.id = st.id;
        ps.dim = st.dim;
        ps.name = st.name;
        ps.simplex_counts.assign(static_cast<std::size_t>(k.dim()) + 1, 0);
        for (int d = 0; d <= k.dim(); ++d)
            for (std::int32_t i = 0; i < k.count(d); ++i)
                if (s.label(d, i) == st.id) ++ps.simplex_counts[d];
        ps.chi_c = chi_c_stratum(s, st.id);
        ps.components = 0;
        for (const auto& c : comps)
            if (c.stratum_id == st.id) ++ps.components;
        ps.connected = ps.components == 1;
        rep.per_stratum.push_back(std::move(ps));
    }
    return rep;
}

std::int64_t chi_c_stratum(const StratifiedSpace& s, int stratum_id) {
    if (!s.has_stratum(stratum_id))
        throw InputError("unknown stratum id " + std::to_string(stratum_id));
    std::int64_t chi = 0;
    for (int d = 0; d <= s.complex().dim(); ++d) {
        std::int64_t cnt = 0;
        for (std::int32_t i = 0; i < s.complex().count(d); ++i)
            if (s.label(d, i) == stratum_id) ++cnt;
        chi += (d % 2 == 0 ? 1 : -1) * cnt;
    }
    return chi;
}

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<StratumComponent> stratum_components(const StratifiedSpace& s) {
    const SimplicialComplex& k = s.complex();
    // flat ids per simplex
    std::vector<std::int32_t> offset(static_cast<std::size_t>(k.dim()) + 2, 0);
    for (int d = 0; d <= k.dim(); ++d) offset[d + 1] = offset[d] + k.count(d);
    auto flat = [&](SimplexRef r) { return offset[r.dim] + r.index; };
    UnionFind uf(static_cast<std::size_t>(offset.back()));
    // two simplices of the same stratum join when one is a face of the other
    for (int d = 1; d <= k.dim(); ++d) {
        for (std::int32_t i = 0; i < k.count(d); ++i) {
            const int lab = s.label(d, i);
            for (const SimplexRef& f : faces_of(k, k.simplices(d)[i])) {
                if (f.dim == d) continue;
                if (s.label(f) == lab) uf.unite(flat({d, i}), flat(f));
            }
        }
    }
    // collect components keyed by (stratum, root), ordered by least member
    std::map<std::pair<int, std::int32_t>, std::vector<SimplexRef>> groups;
    for (int d = 0; d <= k.dim(); ++d)
        for (std::int32_t i = 0; i < k.count(d); ++i) {
            SimplexRef r{d, i};
            groups[{s.label(r), uf.find(flat(r))}].push_back(r);
        }
    std::vector<StratumComponent> out;
    std::vector<std::pair<std::pair<int, SimplexRef>, std::vector<SimplexRef>>> sortable;
    for (auto& [key, refs] : groups) {
        std::sort(refs.begin(), refs.end());
        sortable.push_back({{key.first, refs.front()}, std::move(refs)});
    }
    std::sort(sortable.begin(), sortable.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::map<int, int> counter;
    for (auto& [key, refs] : sortable) {
        StratumComponent c;
        c.stratum_id = key.first;
        c.component = counter[key.first]++;
        c.dim = 0;
        c.chi_c = 0;
        for (const SimplexRef& r : refs) {
            c.dim = std::max(c.dim, r.dim);
            c.chi_c += (r.dim % 2 == 0) ? 1 : -1;
        }
        c.simplices = std::move(refs);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

StratifiedSpace link_at(const StratifiedSpace& s, const Simplex& sigma, int k_dim) {
    const SimplicialComplex& k = s.complex();
    SimplicialComplex link;
    std::vector<std::vector<int>> labels;
    // tau is in the link iff tau and sigma are disjoint and their union is a simplex
    std::map<Simplex, int> link_label;
    for (int d = 0; d <= k.dim(); ++d) {
        for (std::int32_t i = 0; i < k.count(d); ++i) {
            const Simplex& t = k.simplices(d)[i];
            // does t contain sigma?
            if (!std::includes(t.begin(), t.end(), sigma.begin(), sigma.end())) continue;
            if (t.size() == sigma.size()) continue;
            Simplex tau;
            std::set_difference(t.begin(), t.end(), sigma.begin(), sigma.end(),
                                std::back_inserter(tau));
            link_label[tau] = s.label(d, i); // carrier label
            link.insert_raw(std::move(tau));
        }
    }
    if (link.empty())
        throw InputError("normal link is empty (stratum simplex has no cofaces)");
    link.finalize();
    labels.resize(static_cast<std::size_t>(link.dim()) + 1);
    std::set<int> used;
    for (int d = 0; d <= link.dim(); ++d) {
        labels[d].resize(link.count(d));
        for (std::int32_t i = 0; i < link.count(d); ++i) {
            int lab = link_label.at(link.simplices(d)[i]);
            labels[d][i] = lab;
            used.insert(lab);
        }
    }
    std::vector<Stratum> strata;
    for (const Stratum& st : s.strata()) {
        if (!used.count(st.id)) continue;
        strata.push_back(Stratum{st.id, st.dim - k_dim - 1, st.name});
    }
    return stratify(std::move(link), std::move(labels), s.n() - k_dim - 1, std::move(strata));
}

} // namespace

StratifiedSpace normal_link_at(const StratifiedSpace& s, SimplexRef top_simplex) {
    const Simplex& sigma = s.complex().simplex(top_simplex);
    const int k_dim = s.stratum_dim(top_simplex.dim, top_simplex.index);
    if (top_simplex.dim != k_dim)
        throw InputError("normal_link_at requires a top-dimensional simplex of its stratum");
    return link_at(s, sigma, k_dim);
}

StratifiedSpace normal_link(const StratifiedSpace& s, int stratum_id) {
    const Stratum& st = s.stratum(stratum_id);
    // lexicographically least top simplex of the stratum
    for (std::int32_t i = 0; i < s.complex().count(st.dim); ++i) {
        if (s.label(st.dim, i) == stratum_id)
            return link_at(s, s.complex().simplices(st.dim)[i], st.dim);
    }
    throw InputError("malformed stratum: no simplex of the stratum's dimension");
}

StratifiedSpace normal_link(const StratifiedSpace& s, const StratumComponent& comp) {
    for (const SimplexRef& r : comp.simplices)
        if (r.dim == comp.dim) return link_at(s, s.complex().simplex(r), comp.dim);
    throw InputError("malformed stratum component: no top-dimensional simplex");
}

StratifiedSpace subdivide(const StratifiedSpace& s, int times) {
    if (times <= 0) return s;
    Subdivision sd = barycentric_subdivision_tracked(s.complex());
    const SimplicialComplex& k = sd.complex;
    std::vector<std::vector<int>> labels(static_cast<std::size_t>(k.dim()) + 1);
    for (int d = 0; d <= k.dim(); ++d) {
        labels[d].resize(k.count(d));
        for (std::int32_t i = 0; i < k.count(d); ++i) {
            const Simplex& chain = k.simplices(d)[i];
            // ids are assigned in (dim, index) order, so the max id is the top
            // element of the flag; its interior carries the chain simplex
            VertexId top = chain.back();
            labels[d][i] = s.label(sd.vertex_carrier[static_cast<std::size_t>(top)]);
        }
    }
    StratifiedSpace next =
        stratify(std::move(sd.complex), std::move(labels), s.n(), s.strata());
    return subdivide(next, times - 1);
}

StratifiedSpace product_space(const StratifiedSpace& a, const StratifiedSpace& b) {
    SimplicialComplex prod = product(a.complex(), b.complex());
    const VertexId stride = b.complex().max_vertex_id() + 1;
    // product strata, ids = a.id * (#b strata slots) + b.id using a dense pairing
    int bmax = 0;
    for (const Stratum& sb : b.strata()) bmax = std::max(bmax, sb.id);
    auto pair_id = [&](int ia, int ib) { return ia * (bmax + 1) + ib; };
    std::vector<Stratum> strata;
    for (const Stratum& sa : a.strata())
        for (const Stratum& sb : b.strata())
            strata.push_back(Stratum{pair_id(sa.id, sb.id), sa.dim + sb.dim,
                                     sa.name + " x " + sb.name});
    StratifiedSpace out = stratify_by(
        std::move(prod), a.n() + b.n(), std::move(strata),
        [&](int, std::int32_t, const Simplex& s) {
            Simplex pa, pb;
            for (VertexId v : s) {
                pa.push_back(v / stride);
                pb.push_back(v % stride);
            }
            std::sort(pa.begin(), pa.end());
            pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
            std::sort(pb.begin(), pb.end());
            pb.erase(std::unique(pb.begin(), pb.end()), pb.end());
            int la = a.label(static_cast<int>(pa.size()) - 1, a.complex().index_of(pa));
            int lb = b.label(static_cast<int>(pb.size()) - 1, b.complex().index_of(pb));
            return pair_id(la, lb);
        });
    return out;
}

} // namespace strata
