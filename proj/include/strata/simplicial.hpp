#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "strata/error.hpp"

namespace strata {

using VertexId = std::int64_t;

/// A simplex is its strictly increasing list of vertex ids.
using Simplex = std::vector<VertexId>;

struct SimplexRef {
    int dim = -1;
    std::int32_t index = -1;
    bool operator==(const SimplexRef&) const = default;
    bool operator<(const SimplexRef& o) const {
        return dim != o.dim ? dim < o.dim : index < o.index;
    }
};

/// Finite abstract simplicial complex. Simplices are stored per dimension in
/// lexicographic order, so indices (and everything derived from them) are
/// reproducible.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }

    std::int32_t count(int d) const {
        return d >= 0 && d <= dim() ? static_cast<std::int32_t>(by_dim_[d].size()) : 0;
    }
    std::size_t total_simplices() const;

    const std::vector<Simplex>& simplices(int d) const;
    const Simplex& simplex(SimplexRef ref) const { return simplices(ref.dim)[ref.index]; }

    /// Index within its dimension, or -1 if absent.
    std::int32_t index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    std::vector<std::int64_t> f_vector() const;
    std::int64_t euler_characteristic() const;
    VertexId max_vertex_id() const; // -1 when empty

    /// Simplices that are not a proper face of any other simplex.
    std::vector<Simplex> maximal_simplices() const;

    /// Insert a simplex together with all of its faces. Vertices must be
    /// distinct; the tuple need not be sorted.
    void insert_with_faces(Simplex s);

    /// Insert a single simplex assumed face-closed by the caller (builders
    /// that enumerate full face sets use this to skip re-closure).
    /// Returns false when the simplex was already present.
    bool insert_raw(Simplex s);

    /// Call after a batch of insert_raw/insert_with_faces: sorts each
    /// dimension lexicographically and rebuilds the index.
    void finalize();

private:
    std::vector<std::vector<Simplex>> by_dim_;
    struct SimplexHash {
        std::size_t operator()(const Simplex& s) const {
            std::size_t h = 1469598103934665603ull;
            for (VertexId v : s) {
                h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_map<Simplex, std::int32_t, SimplexHash> index_;
    bool finalized_ = true;

    void require_finalized() const;
};

/// Face closure of the given maximal simplices; lexicographic simplex order
/// within each degree. Tuples with repeated vertices are rejected.
SimplicialComplex build_complex(const std::vector<Simplex>& maximal);

/// Cone with apex max_vertex_id()+1.
SimplicialComplex cone(const SimplicialComplex& k);

/// Union of two cones glued along the base; apexes are the two next free ids.
SimplicialComplex suspension(const SimplicialComplex& k);

/// Vertex id used for the pair (a, b) in product(): a*stride + b where
/// stride = l.max_vertex_id() + 1.
VertexId product_vertex_id(VertexId a, VertexId b, VertexId stride);

/// Staircase (order-complex) triangulation of |K| x |L|.
SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l);

/// Identify each group of vertices to its minimum. Throws InputError when two
/// distinct simplices collide or a simplex degenerates.
SimplicialComplex quotient_vertices(const SimplicialComplex& k,
                                    const std::vector<std::vector<VertexId>>& identify);

SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l);

struct Subdivision {
    SimplicialComplex complex;
    /// carrier[v] = simplex of the input whose barycenter became vertex v.
    /// Vertex ids are assigned in (dim, lex index) order, so the largest id in
    /// a subdivision simplex carries its top flag element.
    std::vector<SimplexRef> vertex_carrier;
};

Subdivision barycentric_subdivision_tracked(const SimplicialComplex& k);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

} // namespace strata
