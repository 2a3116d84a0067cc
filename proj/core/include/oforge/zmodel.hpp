#pragma once

#include "oforge/geometry.hpp"

namespace oforge {

/// Planar kinematics of the Z cut around a sharp triangle corner: the angle
/// alpha at a2, the two adjacent side lengths, and the curvatures omega1,
/// omega2 that flatten out at a1 and a2 when the surface is cut open.
struct ZModelInstance {
    double alpha;   // radians, angle of the triangle at a2
    double len12;   // |a1 a2|
    double len23;   // |a2 a3|
    double omega1;  // radians, curvature at a1
    double omega2;  // radians, curvature at a2
};

struct ZModelResult {
    bool overlapping = false;
    // x-coordinate where the swung bank crosses the line carrying edge a2a3
    // (a2 at the origin). Positive and inside the edge means overlap; zero or
    // negative means the bank grazes a2 or clears it.
    double crossing_offset = 0.0;
};

/// Places the triangle with a2 at the origin, a3 on the +x axis and a1 above
/// it, then opens the cut: a3 is first turned by omega2 about a2, and the
/// rigid pair (a2, a3') is then turned by omega1 about a1. Both turns open
/// away from the triangle's side. Reports whether the moved edge crosses the
/// open segment a2a3.
ZModelResult z_overlap_model(const ZModelInstance& m);

/// Threshold curvature (omega1 = omega2 = omega) at which the model switches
/// from overlapping to clear, found by bisection over [0, pi/2] to 1e-4 rad.
/// Throws NoTransition when the model never overlaps (or never clears) in
/// range. Preconditions: 0 < alpha <= pi/3 and len12 <= len23.
double critical_omega(double alpha, double len12 = 1.0, double len23 = 1.0);

}  // namespace oforge
