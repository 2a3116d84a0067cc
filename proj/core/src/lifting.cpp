#include "oforge/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace oforge {

namespace {

// Affine plane z = a*x + b*y + c through three points (x, y, z).
FaceAffine plane_through(Vec3 p0, Vec3 p1, Vec3 p2) {
    Vec2 u = (p1 - p0).xy(), v = (p2 - p0).xy();
    double det = cross(u, v);
    double dz1 = p1.z - p0.z, dz2 = p2.z - p0.z;
    FaceAffine h;
    h.gradient = {(dz1 * v.y - dz2 * u.y) / det, (dz2 * u.x - dz1 * v.x) / det};
    h.offset = p0.z - dot(h.gradient, p0.xy());
    return h;
}

}  // namespace

double LiftedPolyhedron::diameter() const {
    Vec3 lo = coords.front(), hi = coords.front();
    for (const auto& c : coords) {
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y), std::max(hi.z, c.z)};
    }
    return norm(hi - lo);
}

LiftedPolyhedron maxwell_cremona_lift(const PlanarEmbedding& e, std::optional<int> seed_face) {
    auto rep = verify_embedding(e);
    if (!rep.pass)
        throw Error(ErrorCode::ValidationError,
                    "embedding fails verification: " + rep.failures.front());

    const auto& g = e.graph;
    {
        const auto& base_cycle = g.faces[e.base_face];
        std::vector<bool> is_base_edge(g.edge_count(), false);
        int k = static_cast<int>(base_cycle.size());
        for (int i = 0; i < k; ++i)
            is_base_edge[g.edge_index(base_cycle[i], base_cycle[(i + 1) % k])] = true;
        for (int idx = 0; idx < g.edge_count(); ++idx)
            if (!is_base_edge[idx] && !(e.stress[idx] > 0.0))
                throw Error(ErrorCode::ValidationError,
                            "lifting needs strictly positive stress on interior edges");
    }
    const int nf = g.face_count();
    int seed = seed_face.value_or(-1);
    if (seed < 0)
        for (int f = 0; f < nf; ++f)
            if (f != e.base_face) {
                seed = f;
                break;
            }
    if (seed == e.base_face || seed < 0 || seed >= nf)
        throw Error(ErrorCode::ValidationError, "seed face must be an interior face");

    // Propagate the per-face affine functions over the interior dual.
    std::vector<FaceAffine> h(nf);
    std::vector<bool> visited(nf, false);
    visited[seed] = true;
    visited[e.base_face] = true;  // base is excluded from the propagation
    std::queue<int> q;
    q.push(seed);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& cycle = g.faces[f];
        int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            int u = cycle[i], v = cycle[(i + 1) % k];
            int gface = g.face_with_directed_edge(v, u);  // right of u->v
            if (visited[gface]) continue;
            double w = e.stress[g.edge_index(u, v)];
            h[gface].gradient = h[f].gradient + w * rot90(e.coords[v] - e.coords[u]);
            h[gface].offset = h[f].eval(e.coords[u]) - dot(h[gface].gradient, e.coords[u]);
            visited[gface] = true;
            q.push(gface);
        }
    }
    for (int f = 0; f < nf; ++f)
        if (!visited[f])
            throw Error(ErrorCode::InternalInvariantViolation, "interior dual is disconnected");

    // Heights from the lowest-index incident interior face; closure across
    // all other incident faces measures how well the loops around interior
    // vertices cancel.
    std::vector<double> z(g.vertex_count, 0.0);
    std::vector<bool> zset(g.vertex_count, false);
    for (int f = 0; f < nf; ++f) {
        if (f == e.base_face) continue;
        for (int v : g.faces[f])
            if (!zset[v]) {
                z[v] = h[f].eval(e.coords[v]);
                zset[v] = true;
            }
    }
    double closure = 0.0;
    for (int f = 0; f < nf; ++f) {
        if (f == e.base_face) continue;
        for (int v : g.faces[f])
            closure = std::max(closure, std::abs(h[f].eval(e.coords[v]) - z[v]));
    }
    double diam = e.base_diameter();
    if (closure > 1e-10 * std::max(1.0, diam))
        throw Error(ErrorCode::ClosureViolation,
                    "loop closure residual " + std::to_string(closure));

    // The unique affine correction that puts three base vertices at z = 0;
    // the rest of the base must follow, which is the lifting's promise.
    const auto& base = g.faces[e.base_face];
    FaceAffine corr = plane_through({e.coords[base[0]].x, e.coords[base[0]].y, z[base[0]]},
                                    {e.coords[base[1]].x, e.coords[base[1]].y, z[base[1]]},
                                    {e.coords[base[2]].x, e.coords[base[2]].y, z[base[2]]});
    for (int v = 0; v < g.vertex_count; ++v) z[v] -= corr.eval(e.coords[v]);
    for (int f = 0; f < nf; ++f) {
        h[f].gradient = h[f].gradient - corr.gradient;
        h[f].offset -= corr.offset;
    }
    h[e.base_face] = FaceAffine{};  // exactly zero

    LiftedPolyhedron p;
    p.graph = g;
    p.base_face = e.base_face;
    p.closure_residual = closure;
    p.coords.resize(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) p.coords[v] = {e.coords[v].x, e.coords[v].y, z[v]};
    p.face_heights = std::move(h);

    double eps = kGeomEps * std::max(1.0, diam);
    for (int v : base) p.base_planarity_error = std::max(p.base_planarity_error, std::abs(z[v]));
    if (p.base_planarity_error > eps)
        throw Error(ErrorCode::BaseNotPlanar,
                    "base vertex off plane by " + std::to_string(p.base_planarity_error));
    for (int v = 0; v < g.vertex_count; ++v) {
        if (e.on_base[v]) continue;
        if (z[v] <= eps)
            throw Error(ErrorCode::NonPositiveHeights,
                        "interior vertex " + std::to_string(v) + " has height " +
                            std::to_string(z[v]));
    }
    return p;
}

Vec3 face_normal(const LiftedPolyhedron& p, int face) {
    const auto& cycle = p.graph.faces[face];
    int k = static_cast<int>(cycle.size());
    Vec3 n;
    for (int i = 0; i < k; ++i) {
        Vec3 a = p.coords[cycle[i]], b = p.coords[cycle[(i + 1) % k]];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return normalized(n);
}

double face_angle(const LiftedPolyhedron& p, int face, int vertex) {
    if (face < 0 || face >= p.graph.face_count())
        throw Error(ErrorCode::VertexNotOnFace, "face index out of range");
    auto [prev, next] = p.graph.cycle_neighbors(face, vertex);
    return angle_between(p.coords[prev] - p.coords[vertex], p.coords[next] - p.coords[vertex]);
}

double vertex_curvature(const LiftedPolyhedron& p, int vertex) {
    double sum = 0.0;
    for (int f = 0; f < p.graph.face_count(); ++f)
        if (p.graph.corner_index(f, vertex) >= 0) sum += face_angle(p, f, vertex);
    return 2.0 * kPi - sum;
}

MetricReport metric_report(const LiftedPolyhedron& p) {
    MetricReport rep;
    const auto& g = p.graph;
    rep.face_corner_angles.resize(g.face_count());
    rep.curvature.assign(g.vertex_count, 2.0 * kPi);
    for (int f = 0; f < g.face_count(); ++f) {
        const auto& cycle = g.faces[f];
        rep.face_corner_angles[f].resize(cycle.size());
        for (size_t i = 0; i < cycle.size(); ++i) {
            double a = face_angle(p, f, cycle[i]);
            rep.face_corner_angles[f][i] = a;
            rep.curvature[cycle[i]] -= a;
        }
    }
    for (double c : rep.curvature) rep.curvature_total += c;

    // Dihedral between adjacent face planes, oriented so a flat edge gives pi.
    rep.edge_dihedral.resize(g.edge_count());
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        auto [u, v] = g.edges[idx];
        Vec3 nf = face_normal(p, g.face_with_directed_edge(u, v));
        Vec3 ng = face_normal(p, g.face_with_directed_edge(v, u));
        rep.edge_dihedral[idx] = kPi - angle_between(nf, ng);
    }
    return rep;
}

ConvexityReport verify_convex_polyhedron(const LiftedPolyhedron& p) {
    ConvexityReport rep;
    const auto& g = p.graph;
    const double diam = p.diameter();
    const double eps = kGeomEps * std::max(1.0, diam);
    rep.min_side_margin = diam;

    for (int f = 0; f < g.face_count(); ++f) {
        const auto& cycle = g.faces[f];
        Vec3 centroid;
        for (int v : cycle) centroid = centroid + p.coords[v];
        centroid = centroid / static_cast<double>(cycle.size());

        Vec3 raw;
        {
            int k = static_cast<int>(cycle.size());
            for (int i = 0; i < k; ++i) {
                Vec3 a = p.coords[cycle[i]], b = p.coords[cycle[(i + 1) % k]];
                raw.x += (a.y - b.y) * (a.z + b.z);
                raw.y += (a.z - b.z) * (a.x + b.x);
                raw.z += (a.x - b.x) * (a.y + b.y);
            }
        }
        if (norm(raw) <= eps * diam) {
            rep.failures.push_back("face " + std::to_string(f) + " is degenerate");
            continue;
        }
        Vec3 n = normalized(raw);

        for (int v : cycle)
            rep.max_planarity_error =
                std::max(rep.max_planarity_error, std::abs(dot(n, p.coords[v] - centroid)));

        // Every non-incident vertex strictly behind the outward face plane.
        for (int v = 0; v < g.vertex_count; ++v) {
            if (g.corner_index(f, v) >= 0) continue;
            double side = dot(n, p.coords[v] - centroid);
            rep.min_side_margin = std::min(rep.min_side_margin, -side);
            if (side >= -eps)
                rep.failures.push_back("vertex " + std::to_string(v) +
                                       " is not strictly behind face " + std::to_string(f));
        }
    }
    if (rep.max_planarity_error > eps)
        rep.failures.push_back("a face deviates from its plane");

    if (rep.failures.empty()) {
        auto metrics = metric_report(p);
        rep.max_dihedral = *std::max_element(metrics.edge_dihedral.begin(),
                                             metrics.edge_dihedral.end());
        rep.min_curvature = *std::min_element(metrics.curvature.begin(),
                                              metrics.curvature.end());
        if (rep.max_dihedral >= kPi - 1e-9)
            rep.failures.push_back("an edge is flat or reflex");
        if (rep.min_curvature <= 0.0)
            rep.failures.push_back("a vertex has non-positive curvature");
    }

    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace oforge
