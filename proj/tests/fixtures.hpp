#pragma once

// Combinatorial fixtures shared by the unit and acceptance suites. Face
// cycles wind CCW as seen from outside the solid.

#include <vector>

#include "oforge/graph.hpp"
#include "oforge/lifting.hpp"

namespace fixtures {

using oforge::PolyhedralGraph;
using oforge::validate_graph;

inline PolyhedralGraph k4() {
    return validate_graph(4, {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
}

// Bottom 0-3, top 4-7 with vertical edges i to i+4.
inline PolyhedralGraph cube() {
    return validate_graph(8, {{0, 3, 2, 1},
                              {4, 5, 6, 7},
                              {0, 1, 5, 4},
                              {1, 2, 6, 5},
                              {2, 3, 7, 6},
                              {3, 0, 4, 7}});
}

// Square base 0-3, apex 4.
inline PolyhedralGraph square_pyramid() {
    return validate_graph(5, {{0, 3, 2, 1}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}});
}

// Poles 0 and 5, equator 1-4.
inline PolyhedralGraph octahedron() {
    return validate_graph(6, {{0, 1, 2},
                              {0, 2, 3},
                              {0, 3, 4},
                              {0, 4, 1},
                              {5, 2, 1},
                              {5, 3, 2},
                              {5, 4, 3},
                              {5, 1, 4}});
}

// Labeled so that (6,8,5) is a face with neighbor (8,11,5) across edge 8-5,
// making 6-8-5-11 a usable Z path.
inline PolyhedralGraph icosahedron() {
    return validate_graph(12, {{6, 8, 5},  {6, 5, 0},  {6, 0, 1},  {6, 1, 2},   {6, 2, 8},
                               {8, 11, 5}, {5, 3, 0},  {0, 4, 1},  {1, 7, 2},   {2, 9, 8},
                               {5, 11, 3}, {0, 3, 4},  {1, 4, 7},  {2, 7, 9},   {8, 9, 11},
                               {10, 3, 11}, {10, 4, 3}, {10, 7, 4}, {10, 9, 7}, {10, 11, 9}});
}

// Dual of the icosahedron: faces are the CCW rings of faces around each
// icosahedron vertex (walking from face f across the edge into f's previous
// vertex keeps the ring counterclockwise as seen from outside).
inline PolyhedralGraph dodecahedron() {
    PolyhedralGraph ico = icosahedron();
    std::vector<std::vector<int>> rings;
    for (int v = 0; v < ico.vertex_count; ++v) {
        int start = -1;
        for (int f = 0; f < ico.face_count() && start < 0; ++f)
            if (ico.corner_index(f, v) >= 0) start = f;
        std::vector<int> ring;
        int f = start;
        do {
            ring.push_back(f);
            int before = ico.cycle_neighbors(f, v).first;
            f = ico.face_with_directed_edge(v, before);
        } while (f != start);
        rings.push_back(ring);
    }
    return validate_graph(ico.face_count(), rings);
}

// Mirror image: every cycle reversed (the other coherent orientation class).
inline PolyhedralGraph mirrored(const PolyhedralGraph& g) {
    auto faces = g.faces;
    for (auto& f : faces) std::reverse(f.begin(), f.end());
    return validate_graph(g.vertex_count, faces);
}

// Hexagonal prism: bottom ring 0-5, top ring 6-11.
inline PolyhedralGraph hexagonal_prism() {
    std::vector<std::vector<int>> faces = {{0, 5, 4, 3, 2, 1}, {6, 7, 8, 9, 10, 11}};
    for (int i = 0; i < 6; ++i)
        faces.push_back({i, (i + 1) % 6, 6 + (i + 1) % 6, 6 + i});
    return validate_graph(12, faces);
}

// Pup tent: unit-square-ish base, ridge parallel to y. The two slanted
// rectangles meet along the ridge in the planes z = 1 - x and z = 1 + x.
inline oforge::LiftedPolyhedron tent() {
    oforge::LiftedPolyhedron p;
    p.graph = validate_graph(6, {{0, 3, 2, 1},     // base, seen from below
                                 {0, 1, 5, 4},     // slant x >= 0
                                 {2, 3, 4, 5},     // slant x <= 0
                                 {1, 2, 5},        // triangle end y = 1
                                 {3, 0, 4}});      // triangle end y = -1
    p.coords = {{1, -1, 0}, {1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {0, -1, 1}, {0, 1, 1}};
    p.base_face = 0;
    return p;
}

// Combinatorial cube realized with 1x2 top diamond at z = 0.5
// over a 2x4 bottom diamond, joined by four congruent planar trapezoids.
inline oforge::LiftedPolyhedron diamond_cube() {
    oforge::LiftedPolyhedron p;
    p.graph = validate_graph(8, {{1, 3, 0, 2},     // top diamond
                                 {5, 6, 4, 7},     // bottom diamond (base)
                                 {1, 5, 7, 3},
                                 {3, 7, 4, 0},
                                 {0, 4, 6, 2},
                                 {2, 6, 5, 1}});
    p.coords = {{-1, 0, 0.5}, {1, 0, 0.5}, {0, -2, 0.5}, {0, 2, 0.5},
                {-2, 0, 0},   {2, 0, 0},   {0, -4, 0},   {0, 4, 0}};
    p.base_face = 1;
    return p;
}

// Right pyramid over a regular pentagon (circumradius 1, apex height 1).
inline oforge::LiftedPolyhedron pentagonal_pyramid() {
    oforge::LiftedPolyhedron p;
    p.graph = validate_graph(
        6, {{0, 4, 3, 2, 1}, {0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 0, 5}});
    for (int i = 0; i < 5; ++i) {
        double ang = oforge::kPi / 2.0 + 2.0 * oforge::kPi * i / 5.0;
        p.coords.push_back({std::cos(ang), std::sin(ang), 0.0});
    }
    p.coords.push_back({0.0, 0.0, 1.0});
    p.base_face = 0;
    return p;
}

// Axis-aligned unit cube over the cube() labeling.
inline oforge::LiftedPolyhedron unit_cube() {
    oforge::LiftedPolyhedron p;
    p.graph = cube();
    p.coords = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    p.base_face = 0;
    return p;
}

// Regular tetrahedron over the k4() labeling.
inline oforge::LiftedPolyhedron regular_tetrahedron() {
    oforge::LiftedPolyhedron p;
    p.graph = k4();
    double h = std::sqrt(2.0 / 3.0);
    p.coords = {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2.0, 0},
                {0.5, std::sqrt(3.0) / 6.0, h}};
    p.base_face = 0;
    return p;
}

}  // namespace fixtures
