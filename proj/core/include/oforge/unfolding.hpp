#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oforge/lifting.hpp"
#include "oforge/trees.hpp"

namespace oforge {

/// Planar layout produced by cutting along a spanning tree and rolling the
/// face tree flat. placements[f][i] is the image of vertex faces[f][i]; each
/// placed polygon is congruent to its 3D face, and the two copies of every
/// uncut edge coincide.
struct Unfolding {
    std::vector<std::vector<Vec2>> placements;  // per face, aligned with cycles
    // Corner provenance: placements[f][i] is the image of face_cycles[f][i].
    std::vector<std::vector<int>> face_cycles;
    int root_face = 0;
    std::vector<int> parent_face;                   // -1 for the root
    std::vector<std::pair<int, int>> parent_edge;   // uncut primal edge to parent

    double total_area() const;
};

/// Rolls the dual spanning tree (faces joined across uncut edges) flat,
/// breadth-first from the root (default: the base face). The root is placed
/// with its first edge on the +x axis; every face lands outside-up, so all
/// placed polygons wind CCW.
Unfolding unfold(const LiftedPolyhedron& p, const CutTree& t,
                 std::optional<int> root_face = {});

struct OverlapWitness {
    int face_a = -1;
    int face_b = -1;
    double area = 0.0;   // intersection area
    double depth = 0.0;  // minimal translation to separate (SAT over edge normals)
    Vec2 point;          // a point interior to the intersection
};

struct OverlapReport {
    bool overlapping = false;
    bool is_net = true;  // = !overlapping
    double eps_area = 0.0;
    std::vector<OverlapWitness> witnesses;  // sorted by area, largest first
};

/// Pairwise convex-polygon intersection over all face pairs. Pairs touching
/// only along shared boundary fall under eps_area = 1e-9 * total area and do
/// not count as overlap.
OverlapReport detect_overlap(const Unfolding& u);

/// Congruence-invariant signature of a layout: the lexicographic minimum,
/// over all (directed placed edge, reflection) alignments, of the sorted
/// corner list after mapping that edge to the origin/+x axis, on a 1e-6
/// grid.
using CanonicalForm = std::vector<std::pair<long long, long long>>;
CanonicalForm canonical_form(const Unfolding& u);

/// Unfolds every spanning tree and counts distinct canonical forms. Intended
/// for desk scale; throws OverlapPresent if any layout overlaps and
/// LimitExceeded when the tree enumeration passes `limit`.
int count_incongruent_unfoldings(const LiftedPolyhedron& p,
                                 std::optional<long long> limit = {});

// Convex-polygon helpers (shared with tests).
double polygon_area(const std::vector<Vec2>& poly);
std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject,
                              const std::vector<Vec2>& clip);

}  // namespace oforge
