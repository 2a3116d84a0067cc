#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oforge/shaping.hpp"
#include "oforge/unfolding.hpp"
#include "oforge/zmodel.hpp"

namespace oforge {

enum class Route { Disjoint, SharedVertex, Tetrahedron };
const char* route_name(Route r);

/// The distinguished corner and cut path: a1, a2, a3 consecutive in the host
/// face with the sharp angle alpha at a2, and a4 the far neighbor of a3 in
/// the face across edge a2a3.
struct ZPathSelection {
    int base_face = -1;
    int host_face = -1;         // face carrying the corner a1-a2-a3
    int delta_prime_face = -1;  // face across edge a2a3
    int a1 = -1, a2 = -1, a3 = -1, a4 = -1;
    double alpha = 0.0;   // radians
    double omega1 = 0.0;  // curvature at a1
    double omega2 = 0.0;  // curvature at a2
    double len12 = 0.0;
    double len23 = 0.0;
};

struct PipelineConfig {
    double omega_target_deg = 15.0;  // curvature target at a1, a2
    int max_iters = 40;
    double eps = 1e-9;  // geometry tolerance, relative
    std::uint64_t seed = 0;
};

struct ResidualSet {
    double equilibrium = 0.0;
    double closure = 0.0;
    double base_planarity = 0.0;
    double gauss_bonnet = 0.0;        // |total curvature - 4*pi|
    double unfolding_isometry = 0.0;  // worst relative placed-edge-length error
};

/// Machine-checkable witness that the realization unfolds with overlap:
/// replaying unfold + detect_overlap on the stored coordinates and tree
/// reproduces overlapping = true.
struct OverlapCertificate {
    std::string graph_hash;
    Route route = Route::Disjoint;
    PolyhedralGraph graph;
    std::vector<Vec3> coords;
    int base_face = -1;
    int root_face = -1;
    std::vector<ScaleParams> scale_history;
    CutTree tree;
    ZPathSelection z;
    OverlapReport overlap;
    ResidualSet residuals;
};

/// Picks the corner hosting the sharp triangle. Disjoint route: the smallest
/// 3D corner angle over all faces vertex-disjoint from the base, neighbors
/// labeled so |a1 a2| <= |a2 a3|. SharedVertex route: the shared vertex is
/// a3 and a1, a2 are its predecessors in the witness face. Throws
/// AngleTooLarge when the best corner exceeds pi/3 (sharpen first) and
/// NoCandidateCorner when no corner qualifies.
ZPathSelection select_base_and_triangle(const LiftedPolyhedron& p, const FacePairClass& cls);

/// End-to-end construction: classify, embed the base, Tutte-embed, lift,
/// select (sharpening non-triangulated corners), reduce curvatures at a1 and
/// a2, cut along the Z tree, unfold, and detect overlap; halves the vertical
/// scale and retries until the overlap is certified (IterationCapExceeded
/// after config.max_iters).
OverlapCertificate realize_with_overlap(const PolyhedralGraph& g,
                                        const PipelineConfig& config = {});

/// Thin, nearly flat tetrahedron plus the Hamiltonian-path cut tree that
/// unfolds it with overlap: base (0,0,0), (1,0,0), (1/2, eta, 0) and apex
/// (1/2, -eta, eta*kappa), flattened by halving until the overlap
/// certifies. When a graph is given, coordinates are assigned to match its
/// face orientations.
std::pair<LiftedPolyhedron, CutTree> tetrahedron_witness(const PipelineConfig& config = {},
                                                         const PolyhedralGraph* graph = nullptr);

/// Re-runs unfold + detect_overlap from the certificate's stored data.
bool replay_certificate(const OverlapCertificate& c);

/// FNV-1a hash of the canonical graph serialization, as fixed-width hex.
std::string graph_hash(const PolyhedralGraph& g);

}  // namespace oforge
