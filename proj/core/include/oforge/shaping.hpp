#pragma once

#include <utility>
#include <vector>

#include "oforge/lifting.hpp"

namespace oforge {

/// One anisotropic scaling step: either horizontal (along a unit direction
/// in the base plane, z untouched) or vertical (z only).
struct ScaleParams {
    enum class Kind { Horizontal, Vertical };
    Kind kind = Kind::Vertical;
    Vec2 direction;  // unit, used for Horizontal
    double factor = 1.0;

    static ScaleParams horizontal(Vec2 dir, double factor);
    static ScaleParams vertical(double factor);
};

/// Applies the scaling to all coordinates (and the stored face height
/// functions). Combinatorics are untouched; planarity is preserved exactly;
/// convexity is re-verified and DegenerateAfterScale thrown on failure.
LiftedPolyhedron affine_scale(const LiftedPolyhedron& p, const ScaleParams& params);

/// Horizontal-scaling search that drives face_angle(face, vertex) to
/// target - margin or below: tries shrink factors 0.9^k (k <= 60) across 16
/// evenly spaced base-plane axes, smallest distortion first; the first
/// candidate that meets the target while staying convex wins. Returns the
/// scaled polyhedron and the winning parameters (factor 1 when the angle is
/// already sharp enough). Throws SearchExhausted.
std::pair<LiftedPolyhedron, ScaleParams> sharpen_angle(const LiftedPolyhedron& p, int face,
                                                       int vertex, double target = kPi / 3.0,
                                                       double margin = deg2rad(1.0));

/// Vertical-scaling search: halves the z factor (starting at 1) until every
/// target vertex has curvature below the threshold. Targets must avoid the
/// base face (base-vertex curvature grows to keep the Gauss-Bonnet total at
/// 4*pi). At most 40 halvings, then IterationCapExceeded.
std::pair<LiftedPolyhedron, ScaleParams> reduce_curvatures(const LiftedPolyhedron& p,
                                                           const std::vector<int>& targets,
                                                           double threshold);

}  // namespace oforge
