#include <cmath>

#include "doctest.h"
#include "oforge/zmodel.hpp"
#include "oforge/error.hpp"

using namespace oforge;

namespace {
ZModelInstance equilateral(double omega_deg) {
    return {deg2rad(60.0), 1.0, 1.0, deg2rad(omega_deg), deg2rad(omega_deg)};
}
}  // namespace

TEST_CASE("equilateral at 20 degrees just grazes the corner") {
    auto r = z_overlap_model(equilateral(20.0));
    CHECK(!r.overlapping);
    CHECK(std::abs(r.crossing_offset) < 1e-9);
}

TEST_CASE("equilateral at 10 degrees overlaps inside the edge") {
    auto r = z_overlap_model(equilateral(10.0));
    CHECK(r.overlapping);
    CHECK(r.crossing_offset > 0.0);
    CHECK(r.crossing_offset < 1.0);
}

TEST_CASE("equilateral at 25 degrees clears") {
    auto r = z_overlap_model(equilateral(25.0));
    CHECK(!r.overlapping);
    CHECK(r.crossing_offset <= 0.0);
}

TEST_CASE("zero curvature: the banks coincide, no overlap") {
    auto r = z_overlap_model(equilateral(0.0));
    CHECK(!r.overlapping);
    CHECK(r.crossing_offset == 0.0);
}

TEST_CASE("critical omega at the equilateral corner is 20 degrees") {
    double omega = critical_omega(deg2rad(60.0));
    CHECK(rad2deg(omega) == doctest::Approx(20.0).epsilon(0.0025));  // +-0.05 deg
}

TEST_CASE("sharper corners need more curvature to avoid overlap") {
    double at40 = critical_omega(deg2rad(40.0));
    CHECK(rad2deg(at40) > 20.0);

    double at30 = critical_omega(deg2rad(30.0));
    double at50 = critical_omega(deg2rad(50.0));
    double at60 = critical_omega(deg2rad(60.0));
    CHECK(at30 >= at50);
    CHECK(at50 >= at60);
}

TEST_CASE("model domain is validated") {
    CHECK_THROWS_AS(critical_omega(deg2rad(90.0)), Error);          // alpha > pi/3
    CHECK_THROWS_AS(critical_omega(deg2rad(60.0), 2.0, 1.0), Error);  // len12 > len23
    CHECK_THROWS_AS(critical_omega(0.0), Error);
}

TEST_CASE("asymmetric curvatures still certify the diamond-cube corner") {
    // Measured on the diamond-cube realization: alpha = 53.13 deg, side
    // sqrt(5), curvatures 5.97 and 6.47 degrees. Deep overlap expected.
    ZModelInstance m{2.0 * std::atan(0.5), std::sqrt(5.0), std::sqrt(5.0),
                     deg2rad(5.97), deg2rad(6.47)};
    auto r = z_overlap_model(m);
    CHECK(r.overlapping);
}
