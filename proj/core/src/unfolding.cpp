#include "oforge/unfolding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace oforge {

namespace {

// Isometric image of a 3D face in its own plane, outside facing up: origin at
// the first cycle vertex, first edge along +x, so the polygon winds CCW.
std::vector<Vec2> face_chart(const LiftedPolyhedron& p, int face) {
    const auto& cycle = p.graph.faces[face];
    int k = static_cast<int>(cycle.size());
    Vec3 origin = p.coords[cycle[0]];
    Vec3 ex = p.coords[cycle[1]] - origin;
    double len = norm(ex);
    double scale = std::max(1.0, p.diameter());
    if (len <= kGeomEps * scale)
        throw Error(ErrorCode::NumericalDegeneracy,
                    "face " + std::to_string(face) + " has a vanishing edge");
    ex = ex / len;
    Vec3 n = face_normal(p, face);
    Vec3 ey = cross(n, ex);
    std::vector<Vec2> chart(k);
    for (int i = 0; i < k; ++i) {
        Vec3 d = p.coords[cycle[i]] - origin;
        chart[i] = {dot(d, ex), dot(d, ey)};
    }
    if (std::abs(polygon_area(chart)) <= kGeomEps * scale * scale)
        throw Error(ErrorCode::NumericalDegeneracy,
                    "face " + std::to_string(face) + " flattens below tolerance");
    return chart;
}

// Orientation-preserving planar isometry mapping segment (a0, a1) onto
// (b0, b1); lengths are assumed equal.
struct Isometry {
    double c = 1.0, s = 0.0;  // rotation
    Vec2 t;                   // translation
    Vec2 apply(Vec2 p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y}; }
};

Isometry align_segment(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    double ang = std::atan2(b1.y - b0.y, b1.x - b0.x) - std::atan2(a1.y - a0.y, a1.x - a0.x);
    Isometry iso;
    iso.c = std::cos(ang);
    iso.s = std::sin(ang);
    Vec2 ra{iso.c * a0.x - iso.s * a0.y, iso.s * a0.x + iso.c * a0.y};
    iso.t = b0 - ra;
    return iso;
}

}  // namespace

double polygon_area(const std::vector<Vec2>& poly) {
    double a = 0.0;
    int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i) a += cross(poly[i], poly[(i + 1) % k]);
    return 0.5 * a;
}

std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip) {
    std::vector<Vec2> poly = subject;
    int kc = static_cast<int>(clip.size());
    for (int e = 0; e < kc && !poly.empty(); ++e) {
        Vec2 p = clip[e], q = clip[(e + 1) % kc];
        Vec2 dir = q - p;
        std::vector<Vec2> next;
        int n = static_cast<int>(poly.size());
        for (int i = 0; i < n; ++i) {
            Vec2 a = poly[i], b = poly[(i + 1) % n];
            double sa = cross(dir, a - p);
            double sb = cross(dir, b - p);
            bool ina = sa >= 0.0, inb = sb >= 0.0;
            if (ina) next.push_back(a);
            if (ina != inb) {
                double t = sa / (sa - sb);
                next.push_back(a + t * (b - a));
            }
        }
        poly.swap(next);
    }
    return poly;
}

double Unfolding::total_area() const {
    double a = 0.0;
    for (const auto& poly : placements) a += std::abs(polygon_area(poly));
    return a;
}

Unfolding unfold(const LiftedPolyhedron& p, const CutTree& t, std::optional<int> root_face) {
    const auto& g = p.graph;
    if (!is_spanning_tree(g, t))
        throw Error(ErrorCode::NotSpanningTree, "cut edges do not form a spanning tree");

    int root = root_face.value_or(p.base_face >= 0 ? p.base_face : 0);
    if (root < 0 || root >= g.face_count())
        throw Error(ErrorCode::ValidationError, "root face out of range");

    Unfolding u;
    u.root_face = root;
    u.placements.assign(g.face_count(), {});
    u.face_cycles = g.faces;
    u.parent_face.assign(g.face_count(), -1);
    u.parent_edge.assign(g.face_count(), {-1, -1});

    std::vector<bool> placed(g.face_count(), false);
    u.placements[root] = face_chart(p, root);
    placed[root] = true;

    // BFS over faces joined across uncut edges; each child is pinned to its
    // parent along the shared edge and lands on the opposite side.
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& cycle = g.faces[f];
        int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            int a = cycle[i], b = cycle[(i + 1) % k];
            if (t.contains(a, b)) continue;  // cut edge
            int child = g.face_with_directed_edge(b, a);
            if (placed[child]) continue;

            std::vector<Vec2> chart = face_chart(p, child);
            int ib = g.corner_index(child, b);
            int ia = g.corner_index(child, a);
            // Pin the child's copy of the directed edge b->a onto the
            // parent's placed b->a; with both charts outside-up this drops
            // the child on the far side of the shared edge.
            Isometry iso = align_segment(chart[ib], chart[ia],
                                         u.placements[f][(i + 1) % k], u.placements[f][i]);
            u.placements[child].resize(chart.size());
            for (size_t j = 0; j < chart.size(); ++j)
                u.placements[child][j] = iso.apply(chart[j]);
            u.parent_face[child] = f;
            u.parent_edge[child] = {std::min(a, b), std::max(a, b)};
            placed[child] = true;
            q.push(child);
        }
    }
    for (bool ok : placed)
        if (!ok)
            throw Error(ErrorCode::InternalInvariantViolation,
                        "uncut edges fail to span the dual");
    return u;
}

OverlapReport detect_overlap(const Unfolding& u) {
    OverlapReport rep;
    rep.eps_area = 1e-9 * u.total_area();

    const int nf = static_cast<int>(u.placements.size());
    for (int i = 0; i < nf; ++i) {
        for (int j = i + 1; j < nf; ++j) {
            auto inter = clip_convex(u.placements[i], u.placements[j]);
            if (inter.size() < 3) continue;
            double area = std::abs(polygon_area(inter));
            if (area <= rep.eps_area) continue;

            OverlapWitness w;
            w.face_a = i;
            w.face_b = j;
            w.area = area;
            Vec2 centroid;
            for (const auto& pt : inter) centroid = centroid + pt;
            w.point = centroid / static_cast<double>(inter.size());

            // Penetration depth: smallest projection overlap over the edge
            // normals of both polygons (separating-axis form).
            double depth = std::numeric_limits<double>::max();
            for (const auto* poly : {&u.placements[i], &u.placements[j]}) {
                int k = static_cast<int>(poly->size());
                for (int e = 0; e < k; ++e) {
                    Vec2 axis = normalized(rot90((*poly)[(e + 1) % k] - (*poly)[e]));
                    double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
                    for (const auto& pt : u.placements[i]) {
                        double d = dot(axis, pt);
                        amin = std::min(amin, d);
                        amax = std::max(amax, d);
                    }
                    for (const auto& pt : u.placements[j]) {
                        double d = dot(axis, pt);
                        bmin = std::min(bmin, d);
                        bmax = std::max(bmax, d);
                    }
                    depth = std::min(depth, std::min(amax, bmax) - std::max(amin, bmin));
                }
            }
            w.depth = std::max(depth, 0.0);
            rep.witnesses.push_back(w);
        }
    }

    std::sort(rep.witnesses.begin(), rep.witnesses.end(), [](const auto& a, const auto& b) {
        if (a.area != b.area) return a.area > b.area;
        return std::pair{a.face_a, a.face_b} < std::pair{b.face_a, b.face_b};
    });
    rep.overlapping = !rep.witnesses.empty();
    rep.is_net = !rep.overlapping;
    return rep;
}

CanonicalForm canonical_form(const Unfolding& u) {
    std::vector<Vec2> corners;
    for (const auto& poly : u.placements)
        for (const auto& pt : poly) corners.push_back(pt);

    auto signature = [&](Vec2 origin, Vec2 along, bool reflect) {
        double ang = -std::atan2(along.y, along.x);
        double c = std::cos(ang), s = std::sin(ang);
        CanonicalForm sig;
        sig.reserve(corners.size());
        for (const auto& pt : corners) {
            Vec2 d = pt - origin;
            double x = c * d.x - s * d.y;
            double y = s * d.x + c * d.y;
            if (reflect) y = -y;
            sig.push_back({std::llround(x * 1e6), std::llround(y * 1e6)});
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };

    CanonicalForm best;
    bool first = true;
    for (const auto& poly : u.placements) {
        int k = static_cast<int>(poly.size());
        for (int i = 0; i < k; ++i) {
            Vec2 a = poly[i], b = poly[(i + 1) % k];
            for (auto [o, d] : {std::pair{a, b - a}, std::pair{b, a - b}}) {
                for (bool reflect : {false, true}) {
                    CanonicalForm sig = signature(o, d, reflect);
                    if (first || sig < best) {
                        best = std::move(sig);
                        first = false;
                    }
                }
            }
        }
    }
    return best;
}

int count_incongruent_unfoldings(const LiftedPolyhedron& p, std::optional<long long> limit) {
    std::set<CanonicalForm> classes;
    long long seen = 0;
    bool exceeded = false;
    std::optional<Error> failure;

    for_each_spanning_tree(p.graph, [&](const CutTree& t) {
        if (limit && seen >= *limit) {
            exceeded = true;
            return false;
        }
        ++seen;
        Unfolding u = unfold(p, t);
        if (detect_overlap(u).overlapping) {
            failure = Error(ErrorCode::OverlapPresent,
                            "an unfolding overlaps; congruence classing needs nets");
            return false;
        }
        classes.insert(canonical_form(u));
        return true;
    });

    if (failure) throw *failure;
    if (exceeded)
        throw Error(ErrorCode::LimitExceeded,
                    "more than " + std::to_string(*limit) + " spanning trees");
    return static_cast<int>(classes.size());
}

}  // namespace oforge
