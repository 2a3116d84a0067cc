#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "oforge/shaping.hpp"

using namespace oforge;

TEST_CASE("factor 1 is the identity") {
    auto p = fixtures::diamond_cube();
    auto q = affine_scale(p, ScaleParams::vertical(1.0));
    for (int v = 0; v < 8; ++v) CHECK(norm(q.coords[v] - p.coords[v]) == 0.0);
    auto r = affine_scale(p, ScaleParams::horizontal({1, 0}, 1.0));
    for (int v = 0; v < 8; ++v) CHECK(norm(r.coords[v] - p.coords[v]) == 0.0);
}

TEST_CASE("halving z flattens the tent ridge from 90 to ~126.87 degrees") {
    auto p = fixtures::tent();
    auto metrics = metric_report(p);
    int ridge = p.graph.edge_index(4, 5);
    CHECK(metrics.edge_dihedral[ridge] == doctest::Approx(kPi / 2).epsilon(1e-12));

    auto q = affine_scale(p, ScaleParams::vertical(0.5));
    double expected = kPi - 2.0 * std::atan(0.5);  // plane-angle formula
    CHECK(metric_report(q).edge_dihedral[ridge] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rad2deg(expected) == doctest::Approx(126.8699).epsilon(1e-4));
}

TEST_CASE("affine scaling preserves the combinatorial type and face planes") {
    auto p = fixtures::diamond_cube();
    auto q = affine_scale(p, ScaleParams::horizontal(normalized(Vec2{1, 2}), 0.7));
    CHECK(q.graph.vertex_count == p.graph.vertex_count);
    CHECK(q.graph.faces == p.graph.faces);
    CHECK(q.graph.edges == p.graph.edges);
    CHECK(verify_convex_polyhedron(q).pass);
    CHECK(verify_convex_polyhedron(q).max_planarity_error <= 1e-9);
}

TEST_CASE("scaled face height functions still interpolate the vertices") {
    auto g = fixtures::cube();
    auto p = maxwell_cremona_lift(tutte_embed(g, 0, embed_base_polygon(g.faces[0])));
    for (const auto& params : {ScaleParams::vertical(0.35),
                               ScaleParams::horizontal(normalized(Vec2{3, -1}), 0.6)}) {
        auto q = affine_scale(p, params);
        for (int f = 0; f < q.graph.face_count(); ++f)
            for (int v : q.graph.faces[f])
                CHECK(std::abs(q.face_heights[f].eval(q.coords[v].xy()) - q.coords[v].z) <=
                      1e-10);
    }
}

TEST_CASE("regular pentagon squeezed to 1/3 width gains a corner at or below 60 degrees") {
    auto p = fixtures::pentagonal_pyramid();
    double before = 2.0 * kPi;
    for (int v : p.graph.faces[0]) before = std::min(before, face_angle(p, 0, v));
    CHECK(rad2deg(before) == doctest::Approx(108.0).epsilon(1e-9));

    auto q = affine_scale(p, ScaleParams::horizontal({1, 0}, 1.0 / 3.0));
    double after = 2.0 * kPi;
    for (int v : q.graph.faces[0]) after = std::min(after, face_angle(q, 0, v));
    CHECK(after <= kPi / 3.0 + 1e-12);
}

TEST_CASE("sharpen_angle is a no-op when the corner is already sharp") {
    auto p = fixtures::diamond_cube();  // 53.13 deg at the diamond tips
    auto [q, params] = sharpen_angle(p, 0, 3);
    CHECK(params.factor == 1.0);
    for (int v = 0; v < 8; ++v) CHECK(norm(q.coords[v] - p.coords[v]) == 0.0);
}

TEST_CASE("sharpen_angle squeezes a dodecahedron corner below 60 degrees") {
    auto g = fixtures::dodecahedron();
    auto p = maxwell_cremona_lift(tutte_embed(g, 0, embed_base_polygon(g.faces[0])));

    // All pentagon angles hover around 108 degrees; pick a corner on a face
    // disjoint from the base.
    int face = -1, vertex = -1;
    for (int f = 0; f < g.face_count() && face < 0; ++f)
        if (g.shared_vertex_count(f, 0) == 0) {
            face = f;
            vertex = g.faces[f][0];
        }
    REQUIRE(face >= 0);
    CHECK(face_angle(p, face, vertex) > kPi / 3);

    auto [q, params] = sharpen_angle(p, face, vertex);
    CHECK(params.factor < 1.0);
    CHECK(face_angle(q, face, vertex) <= kPi / 3 - deg2rad(1.0) + 1e-12);
    CHECK(verify_convex_polyhedron(q).pass);

    // The base face stays in a single plane under horizontal scaling.
    for (int v : q.graph.faces[0]) CHECK(std::abs(q.coords[v].z) <= 1e-9);
}

TEST_CASE("sharpen_angle with target 0 exhausts the search") {
    auto p = fixtures::diamond_cube();
    CHECK_THROWS_AS(sharpen_angle(p, 0, 3, 0.0), Error);
    try {
        sharpen_angle(p, 0, 3, 0.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SearchExhausted);
    }
}

TEST_CASE("reduce_curvatures: diamond cube already sits under 20 degrees") {
    auto p = fixtures::diamond_cube();
    // Z vertices of the diamond cube: (1,0,0.5)-type and (0,2,0.5)-type.
    auto [q, params] = reduce_curvatures(p, {0, 3}, deg2rad(20.0));
    CHECK(params.factor == 1.0);
}

TEST_CASE("reduce_curvatures flattens a tall pyramid apex") {
    // Tall square pyramid: apex curvature far above 20 degrees.
    LiftedPolyhedron p;
    p.graph = fixtures::square_pyramid();
    p.coords = {{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {0, 0, 3}};
    p.base_face = 0;
    REQUIRE(verify_convex_polyhedron(p).pass);
    REQUIRE(vertex_curvature(p, 4) > deg2rad(20.0));

    auto [q, params] = reduce_curvatures(p, {4}, deg2rad(20.0));
    CHECK(params.factor < 1.0);
    CHECK(vertex_curvature(q, 4) < deg2rad(20.0));

    // Base curvatures picked up the slack: the total stays at 4*pi.
    CHECK(metric_report(q).curvature_total == doctest::Approx(4 * kPi).epsilon(1e-8));
    double base_total = 0.0;
    for (int v = 0; v < 4; ++v) base_total += vertex_curvature(q, v);
    double base_before = 0.0;
    for (int v = 0; v < 4; ++v) base_before += vertex_curvature(p, v);
    CHECK(base_total > base_before);
}

TEST_CASE("reduce_curvatures rejects base-face targets") {
    auto p = fixtures::diamond_cube();
    CHECK_THROWS_AS(reduce_curvatures(p, {5}, deg2rad(20.0)), Error);
}

TEST_CASE("curvature at t = 0.1 is below its t = 1 value on the fixtures") {
    auto g = fixtures::octahedron();
    auto p = maxwell_cremona_lift(tutte_embed(g, 0, embed_base_polygon(g.faces[0])));
    auto q = affine_scale(p, ScaleParams::vertical(0.1));
    for (int v = 0; v < g.vertex_count; ++v) {
        if (p.graph.corner_index(p.base_face, v) >= 0) continue;
        CHECK(vertex_curvature(q, v) < vertex_curvature(p, v));
    }
}

TEST_CASE("non-positive factors are rejected") {
    auto p = fixtures::unit_cube();
    CHECK_THROWS_AS(affine_scale(p, ScaleParams::vertical(0.0)), Error);
    CHECK_THROWS_AS(affine_scale(p, ScaleParams::vertical(-2.0)), Error);
}
