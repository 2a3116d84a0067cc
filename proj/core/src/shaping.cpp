#include "oforge/shaping.hpp"

#include <cmath>

namespace oforge {

ScaleParams ScaleParams::horizontal(Vec2 dir, double factor) {
    ScaleParams s;
    s.kind = Kind::Horizontal;
    s.direction = normalized(dir);
    s.factor = factor;
    return s;
}

ScaleParams ScaleParams::vertical(double factor) {
    ScaleParams s;
    s.kind = Kind::Vertical;
    s.direction = {0.0, 0.0};
    s.factor = factor;
    return s;
}

LiftedPolyhedron affine_scale(const LiftedPolyhedron& p, const ScaleParams& params) {
    if (!(params.factor > 0.0))
        throw Error(ErrorCode::ValidationError, "scale factor must be positive");

    LiftedPolyhedron out = p;
    const double s = params.factor;
    if (params.kind == ScaleParams::Kind::Vertical) {
        for (auto& c : out.coords) c.z *= s;
        for (auto& h : out.face_heights) {
            h.gradient = s * h.gradient;
            h.offset *= s;
        }
    } else {
        Vec2 d = params.direction;
        for (auto& c : out.coords) {
            Vec2 q = c.xy();
            Vec2 scaled = q + (s - 1.0) * dot(q, d) * d;
            c.x = scaled.x;
            c.y = scaled.y;
        }
        // h'(q') = h(S^-1 q') with S = I + (s-1) d d^T, so the gradient maps
        // through the (symmetric) inverse of S.
        for (auto& h : out.face_heights) {
            h.gradient = h.gradient + (1.0 / s - 1.0) * dot(h.gradient, d) * d;
        }
    }

    if (s != 1.0) {
        auto rep = verify_convex_polyhedron(out);
        if (!rep.pass)
            throw Error(ErrorCode::DegenerateAfterScale,
                        "convexity lost after scaling: " + rep.failures.front());
    }
    return out;
}

std::pair<LiftedPolyhedron, ScaleParams> sharpen_angle(const LiftedPolyhedron& p, int face,
                                                       int vertex, double target, double margin) {
    if (p.base_face >= 0 && face == p.base_face)
        throw Error(ErrorCode::ValidationError, "cannot sharpen a corner of the base face");
    const double goal = target - margin;

    if (face_angle(p, face, vertex) <= goal)
        return {p, ScaleParams::horizontal({1.0, 0.0}, 1.0)};

    constexpr int kAxes = 16;
    constexpr int kMaxShrink = 60;
    for (int k = 1; k <= kMaxShrink; ++k) {
        double factor = std::pow(0.9, k);
        for (int i = 0; i < kAxes; ++i) {
            double theta = kPi * i / kAxes;
            ScaleParams params = ScaleParams::horizontal({std::cos(theta), std::sin(theta)},
                                                         factor);
            LiftedPolyhedron candidate;
            try {
                candidate = affine_scale(p, params);
            } catch (const Error&) {
                continue;  // convexity lost at this distortion; keep searching
            }
            if (face_angle(candidate, face, vertex) <= goal)
                return {std::move(candidate), params};
        }
    }
    throw Error(ErrorCode::SearchExhausted, "no horizontal scaling reaches the target angle");
}

std::pair<LiftedPolyhedron, ScaleParams> reduce_curvatures(const LiftedPolyhedron& p,
                                                           const std::vector<int>& targets,
                                                           double threshold) {
    if (p.base_face >= 0)
        for (int v : targets)
            if (p.graph.corner_index(p.base_face, v) >= 0)
                throw Error(ErrorCode::ValidationError,
                            "curvature targets must avoid the base face");

    auto all_below = [&](const LiftedPolyhedron& q) {
        for (int v : targets)
            if (vertex_curvature(q, v) >= threshold) return false;
        return true;
    };

    if (all_below(p)) return {p, ScaleParams::vertical(1.0)};

    double t = 1.0;
    for (int step = 0; step < 40; ++step) {
        t *= 0.5;
        LiftedPolyhedron candidate = affine_scale(p, ScaleParams::vertical(t));
        if (all_below(candidate)) return {std::move(candidate), ScaleParams::vertical(t)};
    }
    throw Error(ErrorCode::IterationCapExceeded, "curvature target not reached in 40 halvings");
}

}  // namespace oforge
