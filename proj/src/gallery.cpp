#include "strata/gallery.hpp"

#include <mutex>

namespace strata {

namespace {

SimplicialComplex circle3() { return build_complex({{0, 1}, {1, 2}, {0, 2}}); }

SimplicialComplex tetra_boundary() {
    return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex torus_staircase() { return product(circle3(), circle3()); }

StratifiedSpace single_stratum(SimplicialComplex k, const std::string& name = "regular") {
    const int n = k.dim();
    return stratify_by(std::move(k), n, {Stratum{0, n, name}},
                       [](int, std::int32_t, const Simplex&) { return 0; });
}

StratifiedSpace build_point() { return single_stratum(build_complex({{0}})); }

StratifiedSpace build_circle() { return single_stratum(circle3()); }

StratifiedSpace build_sphere2() { return single_stratum(tetra_boundary()); }

StratifiedSpace build_torus2() { return single_stratum(torus_staircase()); }

StratifiedSpace build_pinched_torus() {
    // subdivide once so that the two identified vertices share no neighbor,
    // then pinch an original vertex onto the barycenter of the opposite face
    SimplicialComplex sphere = tetra_boundary();
    Subdivision sd = barycentric_subdivision_tracked(sphere);
    const std::int32_t far_face = sphere.index_of({1, 2, 3});
    VertexId vertex0 = -1, opposite = -1;
    for (std::size_t v = 0; v < sd.vertex_carrier.size(); ++v) {
        const SimplexRef ref = sd.vertex_carrier[v];
        if (ref.dim == 0 && sphere.simplices(0)[ref.index] == Simplex{0})
            vertex0 = static_cast<VertexId>(v);
        if (ref.dim == 2 && ref.index == far_face) opposite = static_cast<VertexId>(v);
    }
    SimplicialComplex pinched = quotient_vertices(sd.complex, {{vertex0, opposite}});
    const VertexId pinch = std::min(vertex0, opposite);
    return stratify_by(std::move(pinched), 2,
                       {Stratum{0, 0, "pinch"}, Stratum{1, 2, "regular"}},
                       [pinch](int d, std::int32_t, const Simplex& s) {
                           return (d == 0 && s[0] == pinch) ? 0 : 1;
                       });
}

StratifiedSpace build_susp_torus2() {
    SimplicialComplex torus = torus_staircase();
    const VertexId north = torus.max_vertex_id() + 1;
    const VertexId south = north + 1;
    SimplicialComplex susp = suspension(torus);
    return stratify_by(std::move(susp), 3, {Stratum{0, 0, "poles"}, Stratum{1, 3, "regular"}},
                       [north, south](int d, std::int32_t, const Simplex& s) {
                           return (d == 0 && (s[0] == north || s[0] == south)) ? 0 : 1;
                       });
}

StratifiedSpace build_torus3_2p() {
    SimplicialComplex two_tori = disjoint_union(torus_staircase(), torus_staircase());
    const VertexId p0 = two_tori.max_vertex_id() + 1;
    const VertexId p1 = p0 + 1;
    SimplicialComplex susp = suspension(two_tori);
    return stratify_by(std::move(susp), 3, {Stratum{0, 0, "pinches"}, Stratum{1, 3, "regular"}},
                       [p0, p1](int d, std::int32_t, const Simplex& s) {
                           return (d == 0 && (s[0] == p0 || s[0] == p1)) ? 0 : 1;
                       });
}

StratifiedSpace build_susp_torus3_2p() {
    StratifiedSpace base = build_torus3_2p();
    const VertexId pinch0 = 18, pinch1 = 19; // suspension points of torus3_2p
    SimplicialComplex susp = suspension(base.complex());
    const VertexId north = 20, south = 21;
    // poles: the two new vertices. arcs: the suspensions of the old pinch
    // points minus their endpoints, i.e. {x}, {x,north}, {x,south}.
    auto is_pole = [&](const Simplex& s) {
        return s.size() == 1 && (s[0] == north || s[0] == south);
    };
    auto is_arc = [&](const Simplex& s) {
        if (s.size() == 1) return s[0] == pinch0 || s[0] == pinch1;
        if (s.size() == 2)
            return (s[0] == pinch0 || s[0] == pinch1) && (s[1] == north || s[1] == south);
        return false;
    };
    return stratify_by(std::move(susp), 4,
                       {Stratum{0, 0, "poles"}, Stratum{1, 1, "arcs"}, Stratum{2, 4, "regular"}},
                       [&](int, std::int32_t, const Simplex& s) {
                           if (is_pole(s)) return 0;
                           if (is_arc(s)) return 1;
                           return 2;
                       });
}

StratifiedSpace build_susp_torus3_2p_x_sphere2() {
    return product_space(build_susp_torus3_2p(), build_sphere2());
}

std::vector<GalleryEntry> make_catalogue() {
    const std::vector<std::string> p4 = {"zero", "lower-middle", "upper-middle", "top"};
    std::vector<GalleryEntry> cat;

    {
        GalleryEntry e{"point", "a single vertex", 0, 0, {}};
        e.card.homology = {1};
        for (const auto& p : p4) {
            e.card.ih[p] = {1};
            e.card.ichi[p] = 1;
        }
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"circle", "triangle boundary (3 vertices)", 1, 0, {}};
        e.card.homology = {1, 1};
        for (const auto& p : p4) {
            e.card.ih[p] = {1, 1};
            e.card.ichi[p] = 0;
        }
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"sphere2", "tetrahedron boundary", 2, 0, {}};
        e.card.homology = {1, 0, 1};
        for (const auto& p : p4) {
            e.card.ih[p] = {1, 0, 1};
            e.card.ichi[p] = 2;
        }
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"torus2", "3x3 staircase torus (9 vertices, 18 triangles)", 2, 0, {}};
        e.card.homology = {1, 2, 1};
        for (const auto& p : p4) {
            e.card.ih[p] = {1, 2, 1};
            e.card.ichi[p] = 0;
        }
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"pinched_torus",
                       "2-sphere with two distant vertices identified; one 0-dimensional "
                       "singular stratum",
                       2, 0, {}};
        e.card.homology = {1, 1, 1};
        for (const auto& p : p4) {
            e.card.ih[p] = {1, 0, 1};
            e.card.ichi[p] = 2;
        }
        for (const auto& p : p4) e.card.multiplicity["pinch"][p] = 2;
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"susp_torus2", "suspension of the torus; two isolated singular points", 3,
                       0, {}};
        e.card.homology = {1, 0, 2, 1};
        e.card.ih["zero"] = {1, 2, 0, 1};
        e.card.ih["lower-middle"] = {1, 2, 0, 1};
        e.card.ih["upper-middle"] = {1, 0, 2, 1};
        e.card.ih["top"] = {1, 0, 2, 1};
        e.card.ichi = {{"zero", -2}, {"lower-middle", -2}, {"upper-middle", 2}, {"top", 2}};
        e.card.multiplicity["poles"] = {
            {"zero", -1}, {"lower-middle", -1}, {"upper-middle", 1}, {"top", 1}};
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"torus3_2p",
                       "suspension of two disjoint tori: the twice-pinched 3-torus", 3, 0, {}};
        e.card.homology = {1, 1, 4, 2};
        e.card.ih["zero"] = {2, 4, 0, 2};
        e.card.ih["lower-middle"] = {2, 4, 0, 2};
        e.card.ih["upper-middle"] = {2, 0, 4, 2};
        e.card.ih["top"] = {2, 0, 4, 2};
        e.card.ichi = {{"zero", -4}, {"lower-middle", -4}, {"upper-middle", 4}, {"top", 4}};
        e.card.multiplicity["pinches"] = {
            {"zero", 2}, {"lower-middle", 2}, {"upper-middle", -2}, {"top", -2}};
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"susp_torus3_2p",
                       "suspension of the twice-pinched 3-torus; two poles and two "
                       "1-dimensional singular arcs",
                       4, 0, {}};
        e.card.homology = {1, 0, 1, 4, 2};
        e.card.ih["zero"] = {2, 4, 0, 0, 2};
        e.card.ih["lower-middle"] = {2, 4, 0, 0, 2};
        e.card.ih["upper-middle"] = {2, 0, 0, 4, 2};
        e.card.ih["top"] = {2, 0, 0, 4, 2};
        for (const auto& p : p4) e.card.ichi[p] = 0;
        e.card.multiplicity["poles"] = {
            {"zero", 2}, {"lower-middle", 2}, {"upper-middle", -2}, {"top", -2}};
        e.card.multiplicity["arcs"] = {
            {"zero", 2}, {"lower-middle", 2}, {"upper-middle", -2}, {"top", -2}};
        cat.push_back(std::move(e));
    }
    {
        GalleryEntry e{"susp_torus3_2p_x_sphere2",
                       "product of the suspended twice-pinched 3-torus with the 2-sphere; "
                       "I-chi vanishes for every perversity yet no nonsingular radial field "
                       "exists",
                       6, 0, {}};
        for (const auto& p : p4) e.card.ichi[p] = 0;
        cat.push_back(std::move(e));
    }
    return cat;
}

} // namespace

const std::vector<GalleryEntry>& list_gallery() {
    static const std::vector<GalleryEntry> catalogue = make_catalogue();
    return catalogue;
}

const GalleryEntry& gallery_entry(const std::string& name) {
    for (const GalleryEntry& e : list_gallery())
        if (e.name == name) return e;
    throw InputError("unknown gallery space '" + name + "'");
}

StratifiedSpace gallery(const std::string& name) {
    gallery_entry(name); // validates the name
    static std::mutex mu;
    static std::map<std::string, StratifiedSpace> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;

    StratifiedSpace space = [&]() {
        if (name == "point") return build_point();
        if (name == "circle") return build_circle();
        if (name == "sphere2") return build_sphere2();
        if (name == "torus2") return build_torus2();
        if (name == "pinched_torus") return build_pinched_torus();
        if (name == "susp_torus2") return build_susp_torus2();
        if (name == "torus3_2p") return build_torus3_2p();
        if (name == "susp_torus3_2p") return build_susp_torus3_2p();
        if (name == "susp_torus3_2p_x_sphere2") return build_susp_torus3_2p_x_sphere2();
        throw InputError("unknown gallery space '" + name + "'");
    }();
    cache.emplace(name, space);
    return space;
}

} // namespace strata
