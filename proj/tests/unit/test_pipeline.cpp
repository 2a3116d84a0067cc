#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "oforge/pipeline.hpp"

using namespace oforge;

namespace {

void check_z_constraint(const OverlapCertificate& cert) {
    REQUIRE(cert.tree.z_path.has_value());
    auto [a1, a2, a3, a4] = *cert.tree.z_path;
    CHECK(cert.tree.contains(a1, a2));
    CHECK(cert.tree.contains(a2, a3));
    CHECK(cert.tree.contains(a3, a4));
    CHECK(cert.tree.degree(a1) == 1);
    CHECK(cert.tree.degree(a2) == 2);
}

}  // namespace

TEST_CASE("selection on the diamond cube picks the sharp corner with the Z labels") {
    auto p = fixtures::diamond_cube();
    FacePairClass cls;
    cls.tag = FacePairClass::Tag::Disjoint;
    cls.face_b = 1;  // bottom diamond as base
    cls.face_f = 0;

    auto sel = select_base_and_triangle(p, cls);
    CHECK(sel.host_face == 0);
    CHECK(sel.a1 == 0);
    CHECK(sel.a2 == 2);  // sharp corner (0, -2, 0.5)
    CHECK(sel.a3 == 1);
    CHECK(sel.a4 == 5);
    CHECK(rad2deg(sel.alpha) == doctest::Approx(53.13).epsilon(1e-3));
    CHECK(sel.len12 == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(sel.len23 == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(sel.len12 <= sel.len23 + 1e-12);
}

TEST_CASE("selection demands sharpening when every disjoint corner is blunt") {
    auto g = fixtures::cube();
    auto p = maxwell_cremona_lift(tutte_embed(g, 0, embed_base_polygon(g.faces[0])));
    FacePairClass cls = classify_face_pairs(g);
    // lifted top square keeps right angles
    CHECK_THROWS_AS(select_base_and_triangle(p, cls), Error);
    try {
        select_base_and_triangle(p, cls);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AngleTooLarge);
    }
}

TEST_CASE("pipeline certifies the combinatorial cube via the disjoint route") {
    auto cert = realize_with_overlap(fixtures::cube());
    CHECK(cert.route == Route::Disjoint);
    CHECK(cert.overlap.overlapping);
    REQUIRE(!cert.overlap.witnesses.empty());
    CHECK(cert.overlap.witnesses[0].area > cert.overlap.eps_area);
    CHECK(replay_certificate(cert));
    check_z_constraint(cert);
    // a horizontal squeeze produced the sharp corner
    bool has_horizontal = false;
    for (const auto& s : cert.scale_history)
        if (s.kind == ScaleParams::Kind::Horizontal && s.factor < 1.0) has_horizontal = true;
    CHECK(has_horizontal);
    CHECK(rad2deg(cert.z.alpha) <= 60.0);
}

TEST_CASE("pipeline certifies the square pyramid via the shared-vertex route") {
    auto cert = realize_with_overlap(fixtures::square_pyramid());
    CHECK(cert.route == Route::SharedVertex);
    CHECK(cert.overlap.overlapping);
    CHECK(replay_certificate(cert));
    check_z_constraint(cert);
    // the Z ends in a vertex of the base face
    const auto& base_cycle = cert.graph.faces[cert.z.base_face];
    CHECK(std::count(base_cycle.begin(), base_cycle.end(), cert.z.a4) == 1);
    // a1, a2 stay clear of the base
    CHECK(std::count(base_cycle.begin(), base_cycle.end(), cert.z.a1) == 0);
    CHECK(std::count(base_cycle.begin(), base_cycle.end(), cert.z.a2) == 0);
}

TEST_CASE("pipeline falls back to the tetrahedron witness for K4") {
    auto cert = realize_with_overlap(fixtures::k4());
    CHECK(cert.route == Route::Tetrahedron);
    CHECK(cert.overlap.overlapping);
    CHECK(replay_certificate(cert));
    check_z_constraint(cert);
}

TEST_CASE("tetrahedron witness is convex and certifies on its own") {
    auto [p, t] = tetrahedron_witness();
    CHECK(verify_convex_polyhedron(p).pass);
    auto u = unfold(p, t, p.base_face);
    CHECK(detect_overlap(u).overlapping);
}

TEST_CASE("curvatures at a1 and a2 respect the configured target") {
    PipelineConfig config;
    config.omega_target_deg = 15.0;
    auto cert = realize_with_overlap(fixtures::octahedron(), config);
    CHECK(rad2deg(cert.z.omega1) < 15.0);
    CHECK(rad2deg(cert.z.omega2) < 15.0);
    CHECK(cert.route == Route::Disjoint);
    CHECK(replay_certificate(cert));
}

TEST_CASE("triangulated inputs never need sharpening") {
    for (const auto& g : {fixtures::octahedron(), fixtures::icosahedron()}) {
        auto cert = realize_with_overlap(g);
        for (const auto& s : cert.scale_history)
            CHECK(s.kind == ScaleParams::Kind::Vertical);
        CHECK(cert.overlap.overlapping);
    }
}

TEST_CASE("kinematic model agrees with the measured diamond-cube overlap") {
    auto p = fixtures::diamond_cube();
    FacePairClass cls;
    cls.tag = FacePairClass::Tag::Disjoint;
    cls.face_b = 1;
    cls.face_f = 0;
    auto sel = select_base_and_triangle(p, cls);

    ZModelInstance m{sel.alpha, sel.len12, sel.len23, sel.omega1, sel.omega2};
    CHECK(z_overlap_model(m).overlapping);

    auto t = build_cut_tree(p.graph, {sel.a1, sel.a2, sel.a3, sel.a4});
    CHECK(detect_overlap(unfold(p, t, cls.face_b)).overlapping);
}

TEST_CASE("certificate residuals stay within module tolerances") {
    auto cert = realize_with_overlap(fixtures::icosahedron());
    CHECK(cert.residuals.equilibrium <= 1e-9 * 2.0);
    CHECK(cert.residuals.closure <= 1e-10);
    CHECK(cert.residuals.base_planarity <= 1e-9);
    CHECK(cert.residuals.gauss_bonnet <= 1e-8);
    CHECK(cert.residuals.unfolding_isometry <= 1e-9);
}

TEST_CASE("mirrored inputs (the other orientation class) certify the same routes") {
    auto k4m = realize_with_overlap(fixtures::mirrored(fixtures::k4()));
    CHECK(k4m.route == Route::Tetrahedron);
    CHECK(k4m.overlap.overlapping);
    CHECK(replay_certificate(k4m));

    auto cubem = realize_with_overlap(fixtures::mirrored(fixtures::cube()));
    CHECK(cubem.route == Route::Disjoint);
    CHECK(cubem.overlap.overlapping);
    CHECK(replay_certificate(cubem));
}

TEST_CASE("hexagonal prism certifies after sharpening its right angles") {
    auto cert = realize_with_overlap(fixtures::hexagonal_prism());
    CHECK(cert.route == Route::Disjoint);
    CHECK(cert.overlap.overlapping);
    CHECK(replay_certificate(cert));
    bool sharpened = false;
    for (const auto& s : cert.scale_history)
        if (s.kind == ScaleParams::Kind::Horizontal && s.factor < 1.0) sharpened = true;
    CHECK(sharpened);
    CHECK(rad2deg(cert.z.alpha) <= 60.0 + 1e-6);
}

TEST_CASE("the pipeline is deterministic end to end") {
    auto g = fixtures::square_pyramid();
    auto a = realize_with_overlap(g);
    auto b = realize_with_overlap(g);
    CHECK(a.coords.size() == b.coords.size());
    for (size_t v = 0; v < a.coords.size(); ++v) CHECK(norm(a.coords[v] - b.coords[v]) == 0.0);
    CHECK(a.tree.edges == b.tree.edges);
}

TEST_CASE("graph hash is stable and label-sensitive") {
    auto h1 = graph_hash(fixtures::cube());
    auto h2 = graph_hash(fixtures::cube());
    CHECK(h1 == h2);
    CHECK(h1.size() == 16);
    CHECK(graph_hash(fixtures::octahedron()) != h1);
}
