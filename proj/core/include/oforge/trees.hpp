#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "oforge/graph.hpp"

namespace oforge {

/// Spanning tree of the 1-skeleton, along which the surface is cut.
/// The complement of the tree is a spanning tree of the dual graph.
struct CutTree {
    std::vector<std::pair<int, int>> edges;  // normalized (u < v)
    // Distinguished path a1-a2-a3-a4 when the tree was built around one.
    std::optional<std::array<int, 4>> z_path;

    bool contains(int u, int v) const;
    int degree(int v) const;
};

/// Exact spanning-tree count via the matrix-tree determinant, evaluated with
/// fraction-free (Bareiss) integer elimination. Throws Overflow if the count
/// or an intermediate minor exceeds the representable range.
long long count_spanning_trees(const PolyhedralGraph& g);

/// Backtracking enumeration in deterministic lexicographic edge order with
/// connectivity pruning; yields each spanning tree exactly once. The visitor
/// returns false to stop early.
void for_each_spanning_tree(const PolyhedralGraph& g,
                            const std::function<bool(const CutTree&)>& visit);

/// Collects all spanning trees. Throws LimitExceeded when a limit is given
/// and the enumeration would pass it.
std::vector<CutTree> enumerate_spanning_trees(const PolyhedralGraph& g,
                                              std::optional<long long> limit = {});

/// Spanning tree containing the Z path a1-a2-a3-a4 such that no tree edge
/// other than a1a2 and a2a3 touches a1 or a2. Completed by breadth-first
/// growth over the graph minus {a1, a2} (connected by 3-connectivity),
/// deterministic for a fixed seed (seed 0 = ascending vertex order).
CutTree build_cut_tree(const PolyhedralGraph& g, const std::array<int, 4>& z,
                       std::uint64_t seed = 0);

/// Uniform-ish random spanning tree: Kruskal over a seeded shuffle of the
/// edge list. Deterministic per seed.
CutTree random_spanning_tree(const PolyhedralGraph& g, std::uint64_t seed);

bool is_spanning_tree(const PolyhedralGraph& g, const CutTree& t);

}  // namespace oforge
