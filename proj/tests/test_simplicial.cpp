#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/chain_complex.hpp"
#include "strata/simplicial.hpp"
#include "test_util.hpp"

using namespace strata;
using testutil::brute_rank;

namespace {

SimplicialComplex circle3() { return build_complex({{0, 1}, {1, 2}, {0, 2}}); }
SimplicialComplex tetra_boundary() {
    return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}
SimplicialComplex torus2() { return product(circle3(), circle3()); }

SimplicialComplex octahedron() {
    // vertices 0/5 poles, equator 1,2,3,4
    return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
                          {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 1, 4}});
}

std::vector<std::int64_t> fv(const SimplicialComplex& k) { return k.f_vector(); }

// field-coefficient Kunneth: convolution of betti vectors
std::vector<std::int32_t> convolve(const std::vector<std::int32_t>& a,
                                   const std::vector<std::int32_t>& b) {
    std::vector<std::int32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

TEST_CASE("build_complex: basic f-vectors and errors") {
    CHECK(fv(build_complex({{0, 1, 2}})) == std::vector<std::int64_t>{3, 3, 1});
    CHECK(build_complex({}).empty());
    CHECK(build_complex({}).dim() == -1);
    CHECK(fv(tetra_boundary()) == std::vector<std::int64_t>{4, 6, 4});
    CHECK_THROWS_AS(build_complex({{0, 1, 1}}), InputError);
    CHECK_THROWS_AS(build_complex({{0, -1}}), InputError);
}

TEST_CASE("simplices are deduplicated and lexicographically ordered") {
    SimplicialComplex k = build_complex({{2, 1, 0}, {0, 1, 2}, {1, 2, 3}});
    CHECK(fv(k) == std::vector<std::int64_t>{4, 5, 2});
    const auto& edges = k.simplices(1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) CHECK(edges[i] < edges[i + 1]);
    CHECK(k.index_of({1, 2}) >= 0);
    CHECK(k.index_of({0, 3}) == -1);
}

TEST_CASE("triangle boundary matrix has the textbook signs") {
    SimplicialComplex k = build_complex({{0, 1, 2}});
    ChainComplexQ cc = chain_complex(k);
    auto dense = cc.boundary[2].to_dense(); // rows: {0,1},{0,2},{1,2}
    REQUIRE(dense.size() == 3);
    CHECK(dense[0][0] == 1);
    CHECK(dense[1][0] == -1);
    CHECK(dense[2][0] == 1);
}

TEST_CASE("circle boundary has rank 2 (against the dense oracle)") {
    auto bd = boundary_matrices_int(circle3());
    CHECK(brute_rank(bd[1]) == 2);
    CHECK(linalg::rank_exact(bd[1]) == 2);
}

TEST_CASE("dd = 0 exactly on gallery-style and random complexes") {
    CHECK(chain_complex(tetra_boundary()).dd_is_zero());
    CHECK(chain_complex(torus2()).dd_is_zero());
    std::mt19937 rng(6021);
    for (int i = 0; i < 25; ++i) {
        SimplicialComplex k = testutil::random_complex(rng);
        CHECK(chain_complex(k).dd_is_zero());
    }
}

TEST_CASE("homology dims: worked examples") {
    CHECK(homology_dims(circle3()) == std::vector<std::int32_t>{1, 1});
    CHECK(homology_dims(torus2()) == std::vector<std::int32_t>{1, 2, 1});
    SimplicialComplex t2t2 = disjoint_union(torus2(), torus2());
    CHECK(homology_dims(t2t2) == std::vector<std::int32_t>{2, 4, 2});
    CHECK(homology_dims(suspension(t2t2)) == std::vector<std::int32_t>{1, 1, 4, 2});
}

TEST_CASE("cone: acyclic outputs") {
    SimplicialComplex two_points = build_complex({{0}, {1}});
    CHECK(homology_dims(cone(two_points)) == std::vector<std::int32_t>{1, 0});
    CHECK(homology_dims(cone(circle3())) == std::vector<std::int32_t>{1, 0, 0});
    CHECK(homology_dims(cone(torus2())) == std::vector<std::int32_t>{1, 0, 0, 0});
}

TEST_CASE("suspension: worked examples") {
    SimplicialComplex two_points = build_complex({{0}, {1}});
    SimplicialComplex square = suspension(two_points);
    CHECK(fv(square) == std::vector<std::int64_t>{4, 4});
    CHECK(homology_dims(square) == std::vector<std::int32_t>{1, 1});
    CHECK(homology_dims(suspension(torus2())) == std::vector<std::int32_t>{1, 0, 2, 1});
}

TEST_CASE("suspension shifts homology") {
    for (const SimplicialComplex& k :
         {circle3(), tetra_boundary(), torus2(), disjoint_union(circle3(), circle3())}) {
        auto h = homology_dims(k);
        auto hs = homology_dims(suspension(k));
        REQUIRE(hs.size() == h.size() + 1);
        for (std::size_t i = 2; i < hs.size(); ++i) CHECK(hs[i] == h[i - 1]);
        CHECK(hs[0] == 1);
        CHECK(hs[1] == h[0] - 1); // reduced shift
    }
}

TEST_CASE("product: staircase triangulation") {
    SimplicialComplex t = torus2();
    CHECK(fv(t) == std::vector<std::int64_t>{9, 27, 18});
    CHECK(t.euler_characteristic() == 0);
    SimplicialComplex interval = build_complex({{0, 1}});
    SimplicialComplex sq = product(interval, interval);
    CHECK(homology_dims(sq) == std::vector<std::int32_t>{1, 0, 0});
}

TEST_CASE("product: euler characteristic multiplies and Kunneth holds") {
    std::vector<SimplicialComplex> ks;
    ks.push_back(circle3());
    ks.push_back(tetra_boundary());
    ks.push_back(build_complex({{0, 1}}));
    ks.push_back(build_complex({{0}, {1}}));
    for (const auto& a : ks) {
        for (const auto& b : ks) {
            SimplicialComplex p = product(a, b);
            CHECK(p.euler_characteristic() ==
                  a.euler_characteristic() * b.euler_characteristic());
            CHECK(homology_dims(p) == convolve(homology_dims(a), homology_dims(b)));
        }
    }
}

TEST_CASE("product vertex ids follow the documented pairing") {
    SimplicialComplex a = build_complex({{0, 1}});
    SimplicialComplex b = build_complex({{0, 1, 2}});
    SimplicialComplex p = product(a, b);
    const VertexId stride = b.max_vertex_id() + 1;
    CHECK(stride == 3);
    for (const Simplex& v : p.simplices(0)) {
        VertexId x = v[0] / stride, y = v[0] % stride;
        CHECK(x <= 1);
        CHECK(y <= 2);
        CHECK(product_vertex_id(x, y, stride) == v[0]);
    }
}

TEST_CASE("quotient: pinched sphere from the octahedron") {
    SimplicialComplex oct = octahedron();
    CHECK(homology_dims(oct) == std::vector<std::int32_t>{1, 0, 1});
    SimplicialComplex sd = barycentric_subdivision(oct);
    // antipodal original vertices 0 and 5 keep their ids (vertices come first)
    SimplicialComplex pinched = quotient_vertices(sd, {{0, 5}});
    CHECK(homology_dims(pinched) == std::vector<std::int32_t>{1, 1, 1});
}

TEST_CASE("quotient: identity partition is an isomorphism") {
    SimplicialComplex k = torus2();
    SimplicialComplex q = quotient_vertices(k, {{3}, {7}});
    CHECK(fv(q) == fv(k));
    CHECK(homology_dims(q) == homology_dims(k));
}

TEST_CASE("quotient: degenerate and colliding identifications are rejected") {
    SimplicialComplex tri = build_complex({{0, 1, 2}});
    CHECK_THROWS_WITH_AS(quotient_vertices(tri, {{0, 1}}),
                         doctest::Contains("degenerates"), InputError);
    // two distinct edges collapsing onto the same image
    SimplicialComplex path = build_complex({{0, 1}, {1, 2}});
    CHECK_THROWS_WITH_AS(quotient_vertices(path, {{0, 2}}),
                         doctest::Contains("same image"), InputError);
}

TEST_CASE("disjoint union: shifts ids and adds homology") {
    SimplicialComplex s0 = disjoint_union(build_complex({{0}}), build_complex({{0}}));
    CHECK(homology_dims(s0) == std::vector<std::int32_t>{2});
    SimplicialComplex k = disjoint_union(circle3(), circle3());
    CHECK(homology_dims(k) == std::vector<std::int32_t>{2, 2});
    SimplicialComplex empty;
    SimplicialComplex same = disjoint_union(circle3(), empty);
    CHECK(fv(same) == fv(circle3()));
}

TEST_CASE("barycentric subdivision: flag counts and homology invariance") {
    SimplicialComplex tri = build_complex({{0, 1, 2}});
    CHECK(fv(barycentric_subdivision(tri)) == std::vector<std::int64_t>{7, 12, 6});
    SimplicialComplex c6 = barycentric_subdivision(circle3());
    CHECK(fv(c6) == std::vector<std::int64_t>{6, 6});
    CHECK(homology_dims(c6) == std::vector<std::int32_t>{1, 1});
    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
        SimplicialComplex k = testutil::random_complex(rng, 6, 4, 3);
        CHECK(homology_dims(barycentric_subdivision(k)) == homology_dims(k));
    }
    CHECK(homology_dims(barycentric_subdivision(torus2())) == homology_dims(torus2()));
}

TEST_CASE("euler characteristic from the f-vector matches homology") {
    for (const SimplicialComplex& k :
         {circle3(), tetra_boundary(), torus2(), suspension(torus2())}) {
        auto h = homology_dims(k);
        std::int64_t chi = 0;
        for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * h[i];
        CHECK(chi == k.euler_characteristic());
    }
}

TEST_CASE("maximal simplices recovers the generators of pure complexes") {
    auto maximal = tetra_boundary().maximal_simplices();
    CHECK(maximal.size() == 4);
    SimplicialComplex mixed = build_complex({{0, 1, 2}, {3}});
    auto m2 = mixed.maximal_simplices();
    REQUIRE(m2.size() == 2);
    CHECK(m2[0] == Simplex{3});
    CHECK(m2[1] == Simplex{0, 1, 2});
}
