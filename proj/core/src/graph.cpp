#include "oforge/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace oforge {

namespace {

long long directed_key(int u, int v) {
    return (static_cast<long long>(u) << 32) | static_cast<unsigned int>(v);
}

// Connectivity of the graph with the vertices in `removed` deleted.
bool connected_without(const std::vector<std::vector<int>>& adjacency, int vertex_count,
                       const std::vector<int>& removed) {
    std::vector<bool> banned(vertex_count, false);
    for (int r : removed) banned[r] = true;
    int start = -1;
    int expected = 0;
    for (int v = 0; v < vertex_count; ++v) {
        if (!banned[v]) {
            if (start < 0) start = v;
            ++expected;
        }
    }
    if (expected == 0) return true;
    std::vector<bool> seen(vertex_count, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adjacency[v]) {
            if (!banned[u] && !seen[u]) {
                seen[u] = true;
                ++reached;
                q.push(u);
            }
        }
    }
    return reached == expected;
}

}  // namespace

int PolyhedralGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_lookup_.find(directed_key(u, v));
    return it == edge_lookup_.end() ? -1 : it->second;
}

int PolyhedralGraph::face_with_directed_edge(int u, int v) const {
    auto it = directed_edge_face_.find(directed_key(u, v));
    return it == directed_edge_face_.end() ? -1 : it->second;
}

int PolyhedralGraph::corner_index(int face, int v) const {
    const auto& cycle = faces[face];
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        if (cycle[i] == v) return i;
    return -1;
}

std::pair<int, int> PolyhedralGraph::cycle_neighbors(int face, int v) const {
    const auto& cycle = faces[face];
    int k = static_cast<int>(cycle.size());
    int i = corner_index(face, v);
    if (i < 0) throw Error(ErrorCode::VertexNotOnFace, "vertex not on face");
    return {cycle[(i + k - 1) % k], cycle[(i + 1) % k]};
}

int PolyhedralGraph::shared_vertex_count(int fa, int fb) const {
    return static_cast<int>(shared_vertices(fa, fb).size());
}

std::vector<int> PolyhedralGraph::shared_vertices(int fa, int fb) const {
    std::vector<int> a = faces[fa], b = faces[fb], out;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PolyhedralGraph validate_graph(int vertex_count, std::vector<std::vector<int>> faces) {
    if (vertex_count < 4)
        throw Error(ErrorCode::NotThreeConnected, "a polyhedron needs at least 4 vertices");

    PolyhedralGraph g;
    g.vertex_count = vertex_count;
    g.faces = std::move(faces);

    for (int f = 0; f < g.face_count(); ++f) {
        const auto& cycle = g.faces[f];
        if (cycle.size() < 3)
            throw Error(ErrorCode::DegenerateFace,
                        "face " + std::to_string(f) + " has fewer than 3 vertices");
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size())
            throw Error(ErrorCode::DegenerateFace,
                        "face " + std::to_string(f) + " repeats a vertex");
        for (int v : cycle)
            if (v < 0 || v >= vertex_count)
                throw Error(ErrorCode::DegenerateFace,
                            "face " + std::to_string(f) + " references vertex " +
                                std::to_string(v) + " out of range");
    }

    // Each directed edge must appear exactly once over all cycles, and its
    // reverse exactly once (coherent two-sided orientation).
    for (int f = 0; f < g.face_count(); ++f) {
        const auto& cycle = g.faces[f];
        int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            int u = cycle[i], v = cycle[(i + 1) % k];
            long long key = directed_key(u, v);
            if (g.directed_edge_face_.count(key))
                throw Error(ErrorCode::NonCoherentOrientation,
                            "directed edge " + std::to_string(u) + "->" + std::to_string(v) +
                                " appears twice (a face cycle is reversed)");
            g.directed_edge_face_[key] = f;
        }
    }
    for (const auto& [key, f] : g.directed_edge_face_) {
        int u = static_cast<int>(key >> 32);
        int v = static_cast<int>(key & 0xffffffffLL);
        if (!g.directed_edge_face_.count(directed_key(v, u)))
            throw Error(ErrorCode::NonCoherentOrientation,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " appears in only one face");
    }

    std::set<std::pair<int, int>> undirected;
    for (const auto& [key, f] : g.directed_edge_face_) {
        int u = static_cast<int>(key >> 32);
        int v = static_cast<int>(key & 0xffffffffLL);
        undirected.insert({std::min(u, v), std::max(u, v)});
    }
    g.edges.assign(undirected.begin(), undirected.end());
    for (int e = 0; e < g.edge_count(); ++e)
        g.edge_lookup_[directed_key(g.edges[e].first, g.edges[e].second)] = e;

    if (vertex_count - g.edge_count() + g.face_count() != 2)
        throw Error(ErrorCode::EulerViolation,
                    "V - E + F = " + std::to_string(vertex_count - g.edge_count() +
                                                    g.face_count()) +
                        ", expected 2");

    g.adjacency_.assign(vertex_count, {});
    for (auto [u, v] : g.edges) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

    for (int v = 0; v < vertex_count; ++v)
        if (g.adjacency_[v].size() < 3)
            throw Error(ErrorCode::NotThreeConnected,
                        "vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.adjacency_[v].size()));

    // Brute-force 3-connectivity: removing any vertex pair leaves the rest
    // connected. Cubic in V, which is fine at the intended scale.
    if (!connected_without(g.adjacency_, vertex_count, {}))
        throw Error(ErrorCode::NotThreeConnected, "graph is disconnected");
    for (int a = 0; a < vertex_count; ++a)
        for (int b = a + 1; b < vertex_count; ++b)
            if (!connected_without(g.adjacency_, vertex_count, {a, b}))
                throw Error(ErrorCode::NotThreeConnected,
                            "removing vertices " + std::to_string(a) + ", " + std::to_string(b) +
                                " disconnects the graph");

    return g;
}

DualGraph build_dual(const PolyhedralGraph& g) {
    DualGraph d;
    d.adjacency.assign(g.face_count(), {});
    d.edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges) {
        DualGraph::Edge e;
        e.u = u;
        e.v = v;
        e.face_left = g.face_with_directed_edge(u, v);
        e.face_right = g.face_with_directed_edge(v, u);
        int idx = static_cast<int>(d.edges.size());
        d.edges.push_back(e);
        d.adjacency[e.face_left].push_back(idx);
        d.adjacency[e.face_right].push_back(idx);
    }
    return d;
}

FacePairClass classify_face_pairs(const PolyhedralGraph& g) {
    const int nf = g.face_count();

    // Witness preference: largest base face, then lowest (face_b, face_f).
    auto better = [&](int b, int f, int best_b, int best_f) {
        if (best_b < 0) return true;
        size_t sb = g.faces[b].size(), sbest = g.faces[best_b].size();
        if (sb != sbest) return sb > sbest;
        if (b != best_b) return b < best_b;
        return f < best_f;
    };

    int disjoint_b = -1, disjoint_f = -1;
    int shared_b = -1, shared_f = -1, shared_v = -1;
    bool all_share_two = true;
    for (int i = 0; i < nf; ++i) {
        for (int j = 0; j < nf; ++j) {
            if (i == j) continue;
            auto shared = g.shared_vertices(i, j);
            if (shared.empty()) {
                all_share_two = false;
                if (better(i, j, disjoint_b, disjoint_f)) {
                    disjoint_b = i;
                    disjoint_f = j;
                }
            } else if (shared.size() == 1) {
                all_share_two = false;
                if (better(i, j, shared_b, shared_f)) {
                    shared_b = i;
                    shared_f = j;
                    shared_v = shared.front();
                }
            }
        }
    }

    FacePairClass cls;
    if (disjoint_b >= 0) {
        cls.tag = FacePairClass::Tag::Disjoint;
        cls.face_b = disjoint_b;
        cls.face_f = disjoint_f;
        return cls;
    }
    if (shared_b >= 0) {
        cls.tag = FacePairClass::Tag::SharedVertex;
        cls.face_b = shared_b;
        cls.face_f = shared_f;
        cls.shared_vertex = shared_v;
        return cls;
    }
    (void)all_share_two;

    // Every pair of faces shares an edge; that forces the tetrahedron.
    bool is_k4 = g.vertex_count == 4 && g.face_count() == 4;
    for (const auto& f : g.faces)
        if (f.size() != 3) is_k4 = false;
    if (!is_k4)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "no disjoint or single-shared-vertex face pair, yet not a tetrahedron");
    cls.tag = FacePairClass::Tag::TetrahedronOnly;
    return cls;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EulerViolation: return "EulerViolation";
        case ErrorCode::NonCoherentOrientation: return "NonCoherentOrientation";
        case ErrorCode::NotThreeConnected: return "NotThreeConnected";
        case ErrorCode::DegenerateFace: return "DegenerateFace";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::NotAnEdge: return "NotAnEdge";
        case ErrorCode::InfeasibleZ: return "InfeasibleZ";
        case ErrorCode::NonConvexBase: return "NonConvexBase";
        case ErrorCode::CollinearBase: return "CollinearBase";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
        case ErrorCode::ClosureViolation: return "ClosureViolation";
        case ErrorCode::NonPositiveHeights: return "NonPositiveHeights";
        case ErrorCode::BaseNotPlanar: return "BaseNotPlanar";
        case ErrorCode::VertexNotOnFace: return "VertexNotOnFace";
        case ErrorCode::DegenerateAfterScale: return "DegenerateAfterScale";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
        case ErrorCode::NotSpanningTree: return "NotSpanningTree";
        case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
        case ErrorCode::OverlapPresent: return "OverlapPresent";
        case ErrorCode::NoTransition: return "NoTransition";
        case ErrorCode::NoCandidateCorner: return "NoCandidateCorner";
        case ErrorCode::AngleTooLarge: return "AngleTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace oforge
