#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oforge/embedding.hpp"

namespace oforge {

/// Affine height function of one face: h(x, y) = gradient . (x, y) + offset.
struct FaceAffine {
    Vec2 gradient;
    double offset = 0.0;
    double eval(Vec2 p) const { return dot(gradient, p) + offset; }
};

/// Convex polyhedron realizing a PolyhedralGraph, base face in the plane
/// z = 0 and every other vertex strictly above it.
struct LiftedPolyhedron {
    PolyhedralGraph graph;
    std::vector<Vec3> coords;
    int base_face = -1;  // -1 for externally supplied meshes

    // Per-face affine height functions; populated by the lifting, empty for
    // external meshes (whose faces may be vertical).
    std::vector<FaceAffine> face_heights;

    // Residuals recorded at lift time.
    double closure_residual = 0.0;
    double base_planarity_error = 0.0;

    double diameter() const;
};

/// Maxwell-Cremona lifting of an equilibrium-stressed Schlegel diagram.
/// Face height functions are propagated breadth-first over the interior
/// dual from a seed face with h = 0: crossing the directed interior edge
/// (u, v) with face f on the left and g on the right sets
///   grad_g = grad_f + stress_uv * rot90(p_v - p_u),
/// with the offset fixed by continuity at u. A final affine correction puts
/// the base face exactly at z = 0. Positive stress lifts interior vertices
/// upward under this sign convention (calibrated on the K4 fixture).
LiftedPolyhedron maxwell_cremona_lift(const PlanarEmbedding& e,
                                      std::optional<int> seed_face = {});

struct ConvexityReport {
    bool pass = false;
    double max_planarity_error = 0.0;
    double min_side_margin = 0.0;   // worst signed clearance of a vertex vs. a face plane
    double max_dihedral = 0.0;      // radians; must stay below pi
    double min_curvature = 0.0;     // radians
    std::vector<std::string> failures;
};

/// Checks face planarity, one-sidedness of every face plane, interior
/// dihedral angles strictly below pi, and positive curvature at every
/// vertex. Structured failures only; never throws.
ConvexityReport verify_convex_polyhedron(const LiftedPolyhedron& p);

/// Outward unit normal (Newell's method over the CCW-from-outside cycle).
Vec3 face_normal(const LiftedPolyhedron& p, int face);

/// Interior angle of `face` at `vertex`, in (0, pi). Throws VertexNotOnFace.
double face_angle(const LiftedPolyhedron& p, int face, int vertex);

/// Angle gap 2*pi minus the sum of incident face angles.
double vertex_curvature(const LiftedPolyhedron& p, int vertex);

struct MetricReport {
    // face_corner_angles[f][i] = interior angle at faces[f][i]
    std::vector<std::vector<double>> face_corner_angles;
    std::vector<double> curvature;      // per vertex
    std::vector<double> edge_dihedral;  // per edge index; flat edge = pi
    double curvature_total = 0.0;       // Gauss-Bonnet: 4*pi for convex solids
};

MetricReport metric_report(const LiftedPolyhedron& p);

}  // namespace oforge
