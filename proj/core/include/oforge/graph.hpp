#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "oforge/error.hpp"

namespace oforge {

/// Combinatorial type of a convex polyhedron: a 3-connected planar graph
/// given by its face cycles, each wound counterclockwise as seen from
/// outside the solid. Every edge appears in exactly two cycles, once per
/// direction.
struct PolyhedralGraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> faces;
    // Derived: undirected edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges;

    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    // Index into `edges`, or -1 when {u, v} is not an edge.
    int edge_index(int u, int v) const;
    // Face whose cycle contains the directed edge u->v, or -1.
    int face_with_directed_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    // Position of v in face f's cycle, or -1.
    int corner_index(int face, int v) const;
    // Cycle neighbors of v in face f: (previous, next).
    std::pair<int, int> cycle_neighbors(int face, int v) const;

    // Number of vertices shared by the two face cycles.
    int shared_vertex_count(int fa, int fb) const;
    std::vector<int> shared_vertices(int fa, int fb) const;

    // Filled by validate_graph.
    std::vector<std::vector<int>> adjacency_;
    std::unordered_map<long long, int> directed_edge_face_;
    std::unordered_map<long long, int> edge_lookup_;
};

/// Validates vertex count plus face cycles and builds the derived structure.
/// Checks: faces are simple cycles of length >= 3 over in-range indices,
/// coherent two-sided edge orientation, Euler's V - E + F = 2, minimum
/// degree 3, and 3-connectivity (brute-force vertex-pair removal; fine at
/// the intended scale).
PolyhedralGraph validate_graph(int vertex_count, std::vector<std::vector<int>> faces);

/// Face-adjacency (dual) graph: one node per face, one dual edge per primal
/// edge, annotated with the primal edge and the two incident faces.
struct DualGraph {
    struct Edge {
        int face_left;   // face containing u->v
        int face_right;  // face containing v->u
        int u, v;        // primal edge, u < v as stored in PolyhedralGraph
    };
    std::vector<Edge> edges;                     // aligned with PolyhedralGraph::edges
    std::vector<std::vector<int>> adjacency;     // face -> indices into edges
};

DualGraph build_dual(const PolyhedralGraph& g);

/// Classification of the face-pair structure: either some two faces are
/// vertex-disjoint, or some two faces share exactly one vertex, or the graph
/// is the tetrahedron (every pair of faces shares an edge).
struct FacePairClass {
    enum class Tag { Disjoint, SharedVertex, TetrahedronOnly };
    Tag tag = Tag::TetrahedronOnly;
    int face_b = -1;         // witness base face
    int face_f = -1;         // witness partner face
    int shared_vertex = -1;  // set for SharedVertex
};

/// Exhaustive inspection of all face pairs. Witness choice is deterministic:
/// the pair maximizing |face_b|, ties broken by lowest (face_b, face_f).
FacePairClass classify_face_pairs(const PolyhedralGraph& g);

}  // namespace oforge
