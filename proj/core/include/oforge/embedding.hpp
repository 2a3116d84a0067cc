#pragma once

#include <string>
#include <vector>

#include "oforge/geometry.hpp"
#include "oforge/graph.hpp"

namespace oforge {

// Single geometry knob for this stage: tolerances are this factor times the
// base-polygon diameter.
constexpr double kGeomEps = 1e-9;

/// Shape request for the pinned base polygon.
struct BaseShape {
    enum class Kind { Regular, Explicit };
    Kind kind = Kind::Regular;
    double radius = 1.0;
    std::vector<Vec2> coords;  // used when kind == Explicit

    static BaseShape regular(double radius = 1.0) {
        BaseShape s;
        s.kind = Kind::Regular;
        s.radius = radius;
        return s;
    }
    static BaseShape explicit_coords(std::vector<Vec2> pts) {
        BaseShape s;
        s.kind = Kind::Explicit;
        s.coords = std::move(pts);
        return s;
    }
};

/// Positions for the pinned base polygon, one per cycle position, in strictly
/// convex CCW position. Default: regular k-gon of the given radius centered
/// at the origin, first vertex at angle 90 degrees. Explicit coordinates are
/// validated (CollinearBase / NonConvexBase).
std::vector<Vec2> embed_base_polygon(const std::vector<int>& face_cycle,
                                     const BaseShape& shape = BaseShape::regular());

/// Tutte (spring) embedding of the graph with the base face pinned: every
/// interior vertex sits at the stress-weighted average of its neighbors, so
/// the drawing is a Schlegel diagram with all interior faces convex.
struct PlanarEmbedding {
    PolyhedralGraph graph;
    int base_face = -1;
    std::vector<Vec2> coords;    // per vertex
    std::vector<double> stress;  // per edge index; base-face edges carry 0
    std::vector<bool> on_base;   // per vertex

    double base_diameter() const;
};

std::vector<double> uniform_stress(const PolyhedralGraph& g, int base_face);

/// Solves the equilibrium system for the interior vertices. The pinned
/// polygon is CCW; the base cycle is laid onto it in reverse so that interior
/// faces wind CCW in the drawing. Dense Gaussian elimination with partial
/// pivoting up to 2000 interior vertices, Gauss-Seidel beyond.
PlanarEmbedding tutte_embed(const PolyhedralGraph& g, int base_face,
                            const std::vector<Vec2>& base_coords,
                            const std::vector<double>& stress);

PlanarEmbedding tutte_embed(const PolyhedralGraph& g, int base_face,
                            const std::vector<Vec2>& base_coords);

struct EmbeddingReport {
    bool pass = false;
    double max_equilibrium_residual = 0.0;  // absolute, worst interior vertex
    double tolerance = 0.0;
    bool faces_convex = false;
    bool no_edge_crossings = false;
    bool interior_contained = false;
    std::vector<std::string> failures;
};

/// Structured diagnostics; never throws. Checks equilibrium residual, strict
/// convexity of every interior face, pairwise edge-crossing freedom, and
/// containment of interior vertices in the base polygon.
EmbeddingReport verify_embedding(const PlanarEmbedding& e);

// Gauss-Seidel fallback solver, exposed for direct testing.
void gauss_seidel_solve(const std::vector<std::vector<std::pair<int, double>>>& neighbor_weights,
                        const std::vector<double>& diag, std::vector<Vec2>& x,
                        const std::vector<Vec2>& rhs, double tol, int max_iters);

}  // namespace oforge
