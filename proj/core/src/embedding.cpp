#include "oforge/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace oforge {

namespace {

double polygon_diameter(const std::vector<Vec2>& pts) {
    double d = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, norm(pts[i] - pts[j]));
    return d;
}

void require_strictly_convex_ccw(const std::vector<Vec2>& pts) {
    int k = static_cast<int>(pts.size());
    double scale = polygon_diameter(pts);
    if (scale <= 0.0) throw Error(ErrorCode::CollinearBase, "base polygon has zero extent");
    for (int i = 0; i < k; ++i) {
        Vec2 a = pts[(i + 1) % k] - pts[i];
        Vec2 b = pts[(i + 2) % k] - pts[(i + 1) % k];
        double c = cross(a, b);
        if (std::abs(c) <= kGeomEps * scale * scale)
            throw Error(ErrorCode::CollinearBase, "three consecutive base vertices collinear");
        if (c < 0.0)
            throw Error(ErrorCode::NonConvexBase, "base polygon is not convex CCW");
    }
}

// Dense Gaussian elimination with partial pivoting; two right-hand sides.
void dense_solve(std::vector<std::vector<double>>& a, std::vector<Vec2>& rhs) {
    int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[pivot][k])) pivot = r;
        if (std::abs(a[pivot][k]) < 1e-14)
            throw Error(ErrorCode::SingularSystem, "equilibrium system is singular");
        std::swap(a[k], a[pivot]);
        std::swap(rhs[k], rhs[pivot]);
        for (int r = k + 1; r < n; ++r) {
            double f = a[r][k] / a[k][k];
            if (f == 0.0) continue;
            for (int c = k; c < n; ++c) a[r][c] -= f * a[k][c];
            rhs[r] = rhs[r] - f * rhs[k];
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        Vec2 acc = rhs[k];
        for (int c = k + 1; c < n; ++c) acc = acc - a[k][c] * rhs[c];
        rhs[k] = acc / a[k][k];
    }
}

}  // namespace

std::vector<Vec2> embed_base_polygon(const std::vector<int>& face_cycle, const BaseShape& shape) {
    int k = static_cast<int>(face_cycle.size());
    if (k < 3) throw Error(ErrorCode::DegenerateFace, "base cycle shorter than 3");

    if (shape.kind == BaseShape::Kind::Regular) {
        std::vector<Vec2> pts(k);
        for (int i = 0; i < k; ++i) {
            double ang = kPi / 2.0 + 2.0 * kPi * i / k;
            pts[i] = {shape.radius * std::cos(ang), shape.radius * std::sin(ang)};
        }
        return pts;
    }
    if (static_cast<int>(shape.coords.size()) != k)
        throw Error(ErrorCode::ValidationError, "explicit base coords must match cycle length");
    require_strictly_convex_ccw(shape.coords);
    return shape.coords;
}

std::vector<double> uniform_stress(const PolyhedralGraph& g, int base_face) {
    std::vector<double> w(g.edge_count(), 1.0);
    const auto& cycle = g.faces[base_face];
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) w[g.edge_index(cycle[i], cycle[(i + 1) % k])] = 0.0;
    return w;
}

double PlanarEmbedding::base_diameter() const {
    std::vector<Vec2> pts;
    for (int v : graph.faces[base_face]) pts.push_back(coords[v]);
    return polygon_diameter(pts);
}

PlanarEmbedding tutte_embed(const PolyhedralGraph& g, int base_face,
                            const std::vector<Vec2>& base_coords) {
    return tutte_embed(g, base_face, base_coords, uniform_stress(g, base_face));
}

PlanarEmbedding tutte_embed(const PolyhedralGraph& g, int base_face,
                            const std::vector<Vec2>& base_coords,
                            const std::vector<double>& stress) {
    if (base_face < 0 || base_face >= g.face_count())
        throw Error(ErrorCode::ValidationError, "base face index out of range");
    const auto& cycle = g.faces[base_face];
    const int k = static_cast<int>(cycle.size());
    if (static_cast<int>(base_coords.size()) != k)
        throw Error(ErrorCode::ValidationError, "pinned coords must match the base cycle");
    require_strictly_convex_ccw(base_coords);
    if (static_cast<int>(stress.size()) != g.edge_count())
        throw Error(ErrorCode::ValidationError, "stress must have one entry per edge");

    PlanarEmbedding e;
    e.graph = g;
    e.base_face = base_face;
    e.coords.assign(g.vertex_count, {});
    e.on_base.assign(g.vertex_count, false);
    e.stress = stress;

    std::vector<bool> is_base_edge(g.edge_count(), false);
    for (int i = 0; i < k; ++i)
        is_base_edge[g.edge_index(cycle[i], cycle[(i + 1) % k])] = true;
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        if (is_base_edge[idx]) {
            e.stress[idx] = 0.0;
        } else if (!(stress[idx] > 0.0)) {
            throw Error(ErrorCode::ValidationError,
                        "interior edge " + std::to_string(g.edges[idx].first) + "-" +
                            std::to_string(g.edges[idx].second) + " needs positive stress");
        }
    }

    // Pin the base cycle in reverse onto the CCW polygon so that interior
    // faces wind CCW in the drawing.
    for (int j = 0; j < k; ++j) {
        e.coords[cycle[j]] = base_coords[(k - j) % k];
        e.on_base[cycle[j]] = true;
    }

    std::vector<int> interior;
    std::vector<int> index_of(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v)
        if (!e.on_base[v]) {
            index_of[v] = static_cast<int>(interior.size());
            interior.push_back(v);
        }
    const int n = static_cast<int>(interior.size());
    if (n == 0) return e;

    std::vector<Vec2> rhs(n);
    if (n <= 2000) {
        std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i) {
            int v = interior[i];
            for (int u : g.neighbors(v)) {
                double w = e.stress[g.edge_index(u, v)];
                a[i][i] += w;
                if (index_of[u] >= 0)
                    a[i][index_of[u]] -= w;
                else
                    rhs[i] = rhs[i] + w * e.coords[u];
            }
        }
        dense_solve(a, rhs);
    } else {
        std::vector<std::vector<std::pair<int, double>>> nbr(n);
        std::vector<double> diag(n, 0.0);
        for (int i = 0; i < n; ++i) {
            int v = interior[i];
            for (int u : g.neighbors(v)) {
                double w = e.stress[g.edge_index(u, v)];
                diag[i] += w;
                if (index_of[u] >= 0)
                    nbr[i].push_back({index_of[u], w});
                else
                    rhs[i] = rhs[i] + w * e.coords[u];
            }
        }
        std::vector<Vec2> x(n);
        gauss_seidel_solve(nbr, diag, x, rhs, 1e-12, 100000);
        rhs = x;
    }
    for (int i = 0; i < n; ++i) e.coords[interior[i]] = rhs[i];

    double tol = kGeomEps * e.base_diameter();
    double residual = verify_embedding(e).max_equilibrium_residual;
    if (residual > tol)
        throw Error(ErrorCode::ResidualTooLarge,
                    "equilibrium residual " + std::to_string(residual));
    return e;
}

void gauss_seidel_solve(const std::vector<std::vector<std::pair<int, double>>>& neighbor_weights,
                        const std::vector<double>& diag, std::vector<Vec2>& x,
                        const std::vector<Vec2>& rhs, double tol, int max_iters) {
    const int n = static_cast<int>(diag.size());
    for (int iter = 0; iter < max_iters; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            Vec2 acc = rhs[i];
            for (auto [j, w] : neighbor_weights[i]) acc = acc + w * x[j];
            Vec2 next = acc / diag[i];
            worst = std::max(worst, norm(next - x[i]));
            x[i] = next;
        }
        if (worst < tol) return;
    }
}

EmbeddingReport verify_embedding(const PlanarEmbedding& e) {
    EmbeddingReport rep;
    const auto& g = e.graph;
    const double diam = e.base_diameter();
    rep.tolerance = kGeomEps * diam;

    // Equilibrium at every interior vertex.
    for (int v = 0; v < g.vertex_count; ++v) {
        if (e.on_base[v]) continue;
        Vec2 sum;
        for (int u : g.neighbors(v))
            sum = sum + e.stress[g.edge_index(u, v)] * (e.coords[u] - e.coords[v]);
        rep.max_equilibrium_residual = std::max(rep.max_equilibrium_residual, norm(sum));
    }
    if (rep.max_equilibrium_residual > rep.tolerance)
        rep.failures.push_back("equilibrium residual above tolerance");

    // Strict convexity (CCW) of every interior face.
    rep.faces_convex = true;
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == e.base_face) continue;
        const auto& cycle = g.faces[f];
        int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            Vec2 a = e.coords[cycle[(i + 1) % k]] - e.coords[cycle[i]];
            Vec2 b = e.coords[cycle[(i + 2) % k]] - e.coords[cycle[(i + 1) % k]];
            if (cross(a, b) <= 0.0) {
                rep.faces_convex = false;
                rep.failures.push_back("face " + std::to_string(f) +
                                       " is not strictly convex CCW at vertex " +
                                       std::to_string(cycle[(i + 1) % k]));
                break;
            }
        }
    }

    // Pairwise edge-crossing freedom (segments sharing an endpoint excluded).
    rep.no_edge_crossings = true;
    auto proper_cross = [&](Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
        double d1 = cross(p2 - p1, q1 - p1);
        double d2 = cross(p2 - p1, q2 - p1);
        double d3 = cross(q2 - q1, p1 - q1);
        double d4 = cross(q2 - q1, p2 - q1);
        return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
    };
    for (int i = 0; i < g.edge_count() && rep.no_edge_crossings; ++i) {
        for (int j = i + 1; j < g.edge_count(); ++j) {
            auto [a, b] = g.edges[i];
            auto [c, d] = g.edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (proper_cross(e.coords[a], e.coords[b], e.coords[c], e.coords[d])) {
                rep.no_edge_crossings = false;
                rep.failures.push_back("edges " + std::to_string(a) + "-" + std::to_string(b) +
                                       " and " + std::to_string(c) + "-" + std::to_string(d) +
                                       " cross");
                break;
            }
        }
    }

    // Interior vertices strictly inside the base polygon. The base cycle is
    // clockwise in the drawing, so the interior lies to the right of each
    // directed base edge.
    rep.interior_contained = true;
    const auto& cycle = g.faces[e.base_face];
    int k = static_cast<int>(cycle.size());
    for (int v = 0; v < g.vertex_count && rep.interior_contained; ++v) {
        if (e.on_base[v]) continue;
        for (int i = 0; i < k; ++i) {
            Vec2 p = e.coords[cycle[i]];
            Vec2 q = e.coords[cycle[(i + 1) % k]];
            if (cross(q - p, e.coords[v] - p) >= 0.0) {
                rep.interior_contained = false;
                rep.failures.push_back("vertex " + std::to_string(v) +
                                       " is not strictly inside the base polygon");
                break;
            }
        }
    }

    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace oforge
