#include "oforge/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace oforge {

namespace {

double edge_len(const LiftedPolyhedron& p, int u, int v) {
    return norm(p.coords[u] - p.coords[v]);
}

// Far neighbor of a3 in the face across edge (a2, a3) from the host face:
// the host contains a2->a3, the partner face contains a3->a2, and a4 is the
// partner's other cycle neighbor of a3.
struct AcrossEdge {
    int delta_prime = -1;
    int a4 = -1;
};

AcrossEdge across_edge(const PolyhedralGraph& g, int host, int a2, int a3) {
    AcrossEdge out;
    int fwd = g.face_with_directed_edge(a2, a3);
    out.delta_prime = (fwd == host) ? g.face_with_directed_edge(a3, a2) : fwd;
    auto [prev, next] = g.cycle_neighbors(out.delta_prime, a3);
    out.a4 = (prev == a2) ? next : prev;
    return out;
}

// Completes a ZPathSelection from a chosen corner, enforcing the length rule
// |a1 a2| <= |a2 a3| where the route allows relabeling.
std::optional<ZPathSelection> corner_to_selection(const LiftedPolyhedron& p, int base,
                                                  int host, int a2, int n_first, int n_second) {
    const auto& g = p.graph;
    // Candidate labelings (a1, a3); the first entry respects the length rule.
    std::vector<std::pair<int, int>> labelings;
    double l1 = edge_len(p, n_first, a2), l2 = edge_len(p, n_second, a2);
    if (std::abs(l1 - l2) <= 1e-12 * std::max(1.0, p.diameter())) {
        int lo = std::min(n_first, n_second), hi = std::max(n_first, n_second);
        labelings = {{lo, hi}, {hi, lo}};
    } else if (l1 < l2) {
        labelings = {{n_first, n_second}};
    } else {
        labelings = {{n_second, n_first}};
    }

    for (auto [a1, a3] : labelings) {
        auto across = across_edge(g, host, a2, a3);
        if (across.a4 == a1 || across.a4 == a2 || across.a4 == a3) continue;
        if (across.delta_prime == base) continue;

        ZPathSelection sel;
        sel.base_face = base;
        sel.host_face = host;
        sel.delta_prime_face = across.delta_prime;
        sel.a1 = a1;
        sel.a2 = a2;
        sel.a3 = a3;
        sel.a4 = across.a4;
        sel.alpha = angle_between(p.coords[a1] - p.coords[a2], p.coords[a3] - p.coords[a2]);
        sel.omega1 = vertex_curvature(p, a1);
        sel.omega2 = vertex_curvature(p, a2);
        sel.len12 = edge_len(p, a1, a2);
        sel.len23 = edge_len(p, a2, a3);
        return sel;
    }
    return std::nullopt;
}

struct Corner {
    int face = -1;
    int vertex = -1;
    double angle = 0.0;
};

// Worst relative deviation of a placed edge length from its 3D length.
double unfolding_isometry_error(const LiftedPolyhedron& p, const Unfolding& u) {
    double worst = 0.0;
    for (int f = 0; f < p.graph.face_count(); ++f) {
        const auto& cycle = p.graph.faces[f];
        int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            double placed = norm(u.placements[f][(i + 1) % k] - u.placements[f][i]);
            double solid = edge_len(p, cycle[i], cycle[(i + 1) % k]);
            worst = std::max(worst, std::abs(placed - solid) / solid);
        }
    }
    return worst;
}

// A certificate may only carry residuals below the module tolerances.
void require_certifiable(const ResidualSet& r) {
    if (r.closure > 1e-10 || r.gauss_bonnet > 1e-8 || r.unfolding_isometry > 1e-9)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "certificate residuals exceed module tolerances");
}

// Smallest 3D corner angle over all faces vertex-disjoint from the base.
std::optional<Corner> min_disjoint_corner(const LiftedPolyhedron& p, int base) {
    const auto& g = p.graph;
    std::optional<Corner> best;
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == base || g.shared_vertex_count(f, base) != 0) continue;
        for (int v : g.faces[f]) {
            double a = face_angle(p, f, v);
            if (!best || a < best->angle - 1e-15 ||
                (std::abs(a - best->angle) <= 1e-15 &&
                 std::pair{f, v} < std::pair{best->face, best->vertex}))
                best = Corner{f, v, a};
        }
    }
    return best;
}

}  // namespace

const char* route_name(Route r) {
    switch (r) {
        case Route::Disjoint: return "disjoint";
        case Route::SharedVertex: return "shared_vertex";
        case Route::Tetrahedron: return "tetrahedron";
    }
    return "unknown";
}

ZPathSelection select_base_and_triangle(const LiftedPolyhedron& p, const FacePairClass& cls) {
    const auto& g = p.graph;

    if (cls.tag == FacePairClass::Tag::Disjoint) {
        auto best = min_disjoint_corner(p, cls.face_b);
        if (!best) throw Error(ErrorCode::NoCandidateCorner, "no face is disjoint from the base");
        if (best->angle > kPi / 3.0 + 1e-9)
            throw Error(ErrorCode::AngleTooLarge,
                        "smallest disjoint corner angle is " +
                            std::to_string(rad2deg(best->angle)) + " deg; sharpen first");
        auto [prev, next] = g.cycle_neighbors(best->face, best->vertex);
        auto sel = corner_to_selection(p, cls.face_b, best->face, best->vertex, prev, next);
        if (!sel)
            throw Error(ErrorCode::NoCandidateCorner, "corner admits no valid Z labeling");
        return *sel;
    }

    if (cls.tag == FacePairClass::Tag::SharedVertex) {
        // The shared vertex is a3; a2, a1 are its predecessors in the witness
        // face, so the Z runs along the face cycle into the shared vertex.
        const int host = cls.face_f;
        const int a3 = cls.shared_vertex;
        const auto& cycle = g.faces[host];
        int k = static_cast<int>(cycle.size());
        int i3 = g.corner_index(host, a3);
        int a2 = cycle[(i3 + k - 1) % k];
        int a1 = cycle[(i3 + k - 2) % k];

        double alpha = angle_between(p.coords[a1] - p.coords[a2], p.coords[a3] - p.coords[a2]);
        if (alpha > kPi / 3.0 + 1e-9)
            throw Error(ErrorCode::AngleTooLarge,
                        "shared-route corner angle is " + std::to_string(rad2deg(alpha)) +
                            " deg; sharpen first");

        auto across = across_edge(g, host, a2, a3);
        if (across.a4 == a1)
            throw Error(ErrorCode::NoCandidateCorner, "Z path would revisit a1");

        ZPathSelection sel;
        sel.base_face = cls.face_b;
        sel.host_face = host;
        sel.delta_prime_face = across.delta_prime;
        sel.a1 = a1;
        sel.a2 = a2;
        sel.a3 = a3;
        sel.a4 = across.a4;
        sel.alpha = alpha;
        sel.omega1 = vertex_curvature(p, a1);
        sel.omega2 = vertex_curvature(p, a2);
        sel.len12 = edge_len(p, a1, a2);
        sel.len23 = edge_len(p, a2, a3);
        return sel;
    }

    throw Error(ErrorCode::ValidationError,
                "selection applies to the disjoint and shared-vertex routes only");
}

std::string graph_hash(const PolyhedralGraph& g) {
    std::ostringstream os;
    os << g.vertex_count << ";";
    for (const auto& f : g.faces) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
        os << "|";
    }
    std::uint64_t h = 1469598103934665603ull;
    for (char c : os.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::pair<LiftedPolyhedron, CutTree> tetrahedron_witness(const PipelineConfig& config,
                                                         const PolyhedralGraph* graph) {
    PolyhedralGraph g = graph ? *graph
                              : validate_graph(4, {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
    if (g.vertex_count != 4 || g.face_count() != 4)
        throw Error(ErrorCode::ValidationError, "witness shape must be a tetrahedron");

    // Thin sliver with staggered tips: c sits over x = 1/4 above the long
    // edge ab and the apex d over x = 5/8 below it, at height eta * kappa.
    // The symmetric variant (both tips over x = 1/2) unfolds to a net for
    // every flattening, so the stagger is what makes the path cut collide.
    const double eta = 0.05;
    double kappa = 0.5;

    auto build = [&](double flatten_kappa, bool mirrored) {
        LiftedPolyhedron p;
        p.graph = g;
        double sy = mirrored ? -1.0 : 1.0;
        p.coords = {{0.0, 0.0, 0.0},
                    {1.0, 0.0, 0.0},
                    {0.25, sy * eta, 0.0},
                    {0.625, -sy * eta, eta * flatten_kappa}};
        p.base_face = -1;
        for (int f = 0; f < 4; ++f)
            if (g.corner_index(f, 3) < 0) p.base_face = f;
        return p;
    };

    // The input's cycles fix the orientation class; mirror the y assignment
    // if the first attempt winds the wrong way.
    bool mirrored = false;
    {
        LiftedPolyhedron probe = build(kappa, false);
        Vec3 n = face_normal(probe, probe.base_face);
        if (n.z > 0.0) mirrored = true;
    }

    CutTree path;
    path.edges = {{0, 1}, {1, 2}, {2, 3}};
    std::sort(path.edges.begin(), path.edges.end());
    path.z_path = std::array<int, 4>{0, 1, 2, 3};

    for (int step = 0; step < config.max_iters; ++step) {
        LiftedPolyhedron p = build(kappa, mirrored);
        auto convexity = verify_convex_polyhedron(p);
        if (convexity.pass) {
            Unfolding u = unfold(p, path, p.base_face);
            if (detect_overlap(u).overlapping) return {std::move(p), path};
        }
        kappa *= 0.5;  // flatten further
    }
    throw Error(ErrorCode::IterationCapExceeded,
                "flattening cap reached without certified overlap");
}

bool replay_certificate(const OverlapCertificate& c) {
    LiftedPolyhedron p;
    p.graph = c.graph;
    p.coords = c.coords;
    p.base_face = c.base_face;
    Unfolding u = unfold(p, c.tree, c.root_face);
    return detect_overlap(u).overlapping;
}

OverlapCertificate realize_with_overlap(const PolyhedralGraph& g, const PipelineConfig& config) {
    OverlapCertificate cert;
    cert.graph = g;
    cert.graph_hash = graph_hash(g);

    FacePairClass cls = classify_face_pairs(g);
    const double omega_target = deg2rad(config.omega_target_deg);

    if (cls.tag == FacePairClass::Tag::TetrahedronOnly) {
        auto [p, path] = tetrahedron_witness(config, &g);
        cert.route = Route::Tetrahedron;
        cert.coords = p.coords;
        cert.base_face = p.base_face;
        cert.root_face = p.base_face;
        cert.tree = path;
        auto [a1, a2, a3, a4] = *path.z_path;
        cert.z.base_face = p.base_face;
        cert.z.host_face = g.face_with_directed_edge(a2, a3);
        cert.z.delta_prime_face = g.face_with_directed_edge(a3, a2);
        cert.z.a1 = a1;
        cert.z.a2 = a2;
        cert.z.a3 = a3;
        cert.z.a4 = a4;
        cert.z.alpha = angle_between(p.coords[a1] - p.coords[a2], p.coords[a3] - p.coords[a2]);
        cert.z.omega1 = vertex_curvature(p, a1);
        cert.z.omega2 = vertex_curvature(p, a2);
        cert.z.len12 = edge_len(p, a1, a2);
        cert.z.len23 = edge_len(p, a2, a3);

        Unfolding u = unfold(p, path, p.base_face);
        cert.overlap = detect_overlap(u);
        cert.residuals.gauss_bonnet = std::abs(metric_report(p).curvature_total - 4.0 * kPi);
        cert.residuals.unfolding_isometry = unfolding_isometry_error(p, u);
        require_certifiable(cert.residuals);
        return cert;
    }

    cert.route = cls.tag == FacePairClass::Tag::Disjoint ? Route::Disjoint : Route::SharedVertex;

    // Steps (1)-(4): pin the witness base and lift the Tutte embedding.
    auto base_coords = embed_base_polygon(g.faces[cls.face_b], BaseShape::regular(1.0));
    PlanarEmbedding emb = tutte_embed(g, cls.face_b, base_coords);
    EmbeddingReport emb_rep = verify_embedding(emb);
    cert.residuals.equilibrium = emb_rep.max_equilibrium_residual;

    LiftedPolyhedron p = maxwell_cremona_lift(emb);
    cert.residuals.closure = p.closure_residual;
    cert.residuals.base_planarity = p.base_planarity_error;

    // config.eps gates what the certificate is allowed to carry; the module
    // tolerances themselves stay fixed.
    double gate = config.eps * emb.base_diameter();
    if (cert.residuals.equilibrium > gate || cert.residuals.base_planarity > gate)
        throw Error(ErrorCode::ResidualTooLarge,
                    "solver residuals exceed the configured certificate gate");

    // Steps (5)-(6): pick the sharp corner, squeezing horizontally first when
    // no eligible face angle is small enough.
    auto select_with_sharpen = [&](LiftedPolyhedron& solid) {
        try {
            return select_base_and_triangle(solid, cls);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::AngleTooLarge) throw;
            int face, vertex;
            if (cls.tag == FacePairClass::Tag::Disjoint) {
                auto corner = min_disjoint_corner(solid, cls.face_b);
                face = corner->face;
                vertex = corner->vertex;
            } else {
                face = cls.face_f;
                const auto& cycle = g.faces[face];
                int k = static_cast<int>(cycle.size());
                vertex = cycle[(g.corner_index(face, cls.shared_vertex) + k - 1) % k];
            }
            auto [sharpened, params] = sharpen_angle(solid, face, vertex);
            solid = std::move(sharpened);
            cert.scale_history.push_back(params);
            return select_base_and_triangle(solid, cls);
        }
    };

    for (int iter = 0; iter < config.max_iters; ++iter) {
        ZPathSelection sel = select_with_sharpen(p);

        // Step (7): flatten until the curvatures at a1, a2 sit below target.
        if (sel.omega1 >= omega_target || sel.omega2 >= omega_target) {
            auto [reduced, params] = reduce_curvatures(p, {sel.a1, sel.a2}, omega_target);
            p = std::move(reduced);
            cert.scale_history.push_back(params);
            sel = select_with_sharpen(p);
        }

        // Steps (8)-(10): cut the Z tree, unfold, check.
        CutTree tree = build_cut_tree(g, {sel.a1, sel.a2, sel.a3, sel.a4}, config.seed);
        Unfolding u = unfold(p, tree, cls.face_b);
        OverlapReport overlap = detect_overlap(u);
        if (overlap.overlapping) {
            cert.coords = p.coords;
            cert.base_face = p.base_face;
            cert.root_face = cls.face_b;
            cert.tree = tree;
            cert.z = sel;
            cert.overlap = overlap;
            cert.residuals.gauss_bonnet =
                std::abs(metric_report(p).curvature_total - 4.0 * kPi);
            cert.residuals.unfolding_isometry = unfolding_isometry_error(p, u);
            require_certifiable(cert.residuals);
            return cert;
        }

        // No overlap yet: flatten further and re-measure.
        ScaleParams halve = ScaleParams::vertical(0.5);
        p = affine_scale(p, halve);
        cert.scale_history.push_back(halve);
    }
    throw Error(ErrorCode::IterationCapExceeded,
                "no overlap certified within the iteration cap");
}

}  // namespace oforge
