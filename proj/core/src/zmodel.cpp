#include "oforge/zmodel.hpp"

#include <cmath>

#include "oforge/error.hpp"

namespace oforge {

ZModelResult z_overlap_model(const ZModelInstance& m) {
    const Vec2 a2{0.0, 0.0};
    const Vec2 a3{m.len23, 0.0};
    const Vec2 a1 = m.len12 * Vec2{std::cos(m.alpha), std::sin(m.alpha)};

    // Open the cut: turn a3 about a2, then the rigid pair (a2, a3') about a1.
    // Both turns are clockwise, away from the triangle's side of the edge.
    Vec2 a3p = rotate(a3, -m.omega2);
    Vec2 a2pp = a1 + rotate(a2 - a1, -m.omega1);
    Vec2 a3pp = a1 + rotate(a3p - a1, -m.omega1);

    ZModelResult r;
    const double tol = 1e-12 * std::max(1.0, m.len23);

    // Coincident banks (zero curvature): no gap, no overlap.
    if (std::abs(a2pp.y) <= tol && std::abs(a3pp.y) <= tol) {
        r.crossing_offset = 0.0;
        r.overlapping = false;
        return r;
    }
    if ((a2pp.y > tol && a3pp.y > tol) || (a2pp.y < -tol && a3pp.y < -tol)) {
        // Bank stays on one side of the a2a3 line; clear by the smaller gap.
        r.crossing_offset = -std::min(std::abs(a2pp.y), std::abs(a3pp.y));
        r.overlapping = false;
        return r;
    }

    double t = a2pp.y / (a2pp.y - a3pp.y);
    r.crossing_offset = a2pp.x + t * (a3pp.x - a2pp.x);
    r.overlapping = t > tol && t < 1.0 - tol && r.crossing_offset > tol &&
                    r.crossing_offset < m.len23 - tol;
    return r;
}

double critical_omega(double alpha, double len12, double len23) {
    if (!(alpha > 0.0) || alpha > kPi / 3.0 + 1e-12)
        throw Error(ErrorCode::ValidationError, "alpha must lie in (0, pi/3]");
    if (!(len12 > 0.0) || !(len23 > 0.0) || len12 > len23 * (1.0 + 1e-12))
        throw Error(ErrorCode::ValidationError, "side lengths must satisfy 0 < len12 <= len23");

    auto overlaps = [&](double omega) {
        return z_overlap_model({alpha, len12, len23, omega, omega}).overlapping;
    };

    double lo = 1e-6;          // just-opened cut must overlap
    double hi = kPi / 2.0;     // quarter-turn curvature must clear
    if (!overlaps(lo) || overlaps(hi))
        throw Error(ErrorCode::NoTransition, "model does not switch from overlap to clear");

    while (hi - lo > 1e-4) {
        double mid = 0.5 * (lo + hi);
        (overlaps(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oforge
