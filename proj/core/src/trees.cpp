#include "oforge/trees.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>

namespace oforge {

namespace {

// Union-find without path compression so that unions can be undone.
struct UndoableDsu {
    std::vector<int> parent, rank_;
    std::vector<std::pair<int, int>> log;  // (child root, old rank of parent root)

    explicit UndoableDsu(int n) : parent(n), rank_(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        log.push_back({b, rank_[a]});
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }
    void undo() {
        auto [child, old_rank] = log.back();
        log.pop_back();
        rank_[parent[child]] = old_rank;
        parent[child] = child;
    }
};

__int128 checked_mul(__int128 a, __int128 b) {
    if (a == 0 || b == 0) return 0;
    __int128 r = a * b;
    if (r / b != a) throw Error(ErrorCode::Overflow, "spanning-tree minor overflows");
    return r;
}

}  // namespace

bool CutTree::contains(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

int CutTree::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

long long count_spanning_trees(const PolyhedralGraph& g) {
    const int n = g.vertex_count - 1;  // reduced Laplacian, last row/col dropped
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
    for (auto [u, v] : g.edges) {
        if (u < n) m[u][u] += 1;
        if (v < n) m[v][v] += 1;
        if (u < n && v < n) {
            m[u][v] -= 1;
            m[v][u] -= 1;
        }
    }

    // Bareiss fraction-free elimination; every division is exact.
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (checked_mul(m[i][j], m[k][k]) - checked_mul(m[i][k], m[k][j])) / prev;
        prev = m[k][k];
    }
    __int128 det = sign * m[n - 1][n - 1];
    if (det > static_cast<__int128>(std::numeric_limits<long long>::max()) || det < 0)
        throw Error(ErrorCode::Overflow, "spanning-tree count exceeds 64-bit range");
    return static_cast<long long>(det);
}

void for_each_spanning_tree(const PolyhedralGraph& g,
                            const std::function<bool(const CutTree&)>& visit) {
    const int n = g.vertex_count;
    const int ne = g.edge_count();
    UndoableDsu dsu(n);
    std::vector<int> chosen;
    bool stop = false;

    // Connectivity of chosen-edges plus the not-yet-decided suffix; prunes
    // exclude branches that can no longer span.
    auto feasible = [&](int next_idx) {
        UndoableDsu probe = dsu;
        int components = 0;
        for (int v = 0; v < n; ++v)
            if (probe.find(v) == v) ++components;
        for (int e = next_idx; e < ne && components > 1; ++e)
            if (probe.unite(g.edges[e].first, g.edges[e].second)) --components;
        return components == 1;
    };

    std::function<void(int)> rec = [&](int idx) {
        if (stop) return;
        if (static_cast<int>(chosen.size()) == n - 1) {
            CutTree t;
            for (int e : chosen) t.edges.push_back(g.edges[e]);
            std::sort(t.edges.begin(), t.edges.end());
            if (!visit(t)) stop = true;
            return;
        }
        if (idx == ne) return;
        if (static_cast<int>(chosen.size()) + (ne - idx) < n - 1) return;

        auto [u, v] = g.edges[idx];
        if (dsu.unite(u, v)) {
            chosen.push_back(idx);
            rec(idx + 1);
            chosen.pop_back();
            dsu.undo();
        }
        if (stop) return;
        if (feasible(idx + 1)) rec(idx + 1);
    };
    rec(0);
}

std::vector<CutTree> enumerate_spanning_trees(const PolyhedralGraph& g,
                                              std::optional<long long> limit) {
    std::vector<CutTree> out;
    bool exceeded = false;
    for_each_spanning_tree(g, [&](const CutTree& t) {
        if (limit && static_cast<long long>(out.size()) >= *limit) {
            exceeded = true;
            return false;
        }
        out.push_back(t);
        return true;
    });
    if (exceeded)
        throw Error(ErrorCode::LimitExceeded,
                    "more than " + std::to_string(*limit) + " spanning trees");
    return out;
}

CutTree build_cut_tree(const PolyhedralGraph& g, const std::array<int, 4>& z,
                       std::uint64_t seed) {
    auto [a1, a2, a3, a4] = z;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (z[i] == z[j])
                throw Error(ErrorCode::InfeasibleZ, "Z path vertices must be distinct");
    for (auto [u, v] : {std::pair{a1, a2}, {a2, a3}, {a3, a4}})
        if (g.edge_index(u, v) < 0)
            throw Error(ErrorCode::NotAnEdge,
                        std::to_string(u) + "-" + std::to_string(v) + " is not an edge");

    CutTree t;
    t.z_path = z;
    t.edges = {{std::min(a1, a2), std::max(a1, a2)},
               {std::min(a2, a3), std::max(a2, a3)},
               {std::min(a3, a4), std::max(a3, a4)}};

    // Grow over edges avoiding a1 and a2; attachment starts from a3 and a4.
    std::vector<bool> in_tree(g.vertex_count, false);
    in_tree[a1] = in_tree[a2] = in_tree[a3] = in_tree[a4] = true;
    std::queue<int> frontier;
    frontier.push(a3);
    frontier.push(a4);

    // seed permutes the neighbor visit order; 0 keeps ascending order.
    auto shuffled = [&](const std::vector<int>& nbrs) {
        std::vector<int> order = nbrs;
        if (seed != 0) {
            std::mt19937_64 rng(seed);
            std::shuffle(order.begin(), order.end(), rng);
        }
        return order;
    };

    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int u : shuffled(g.neighbors(v))) {
            if (u == a1 || u == a2 || in_tree[u]) continue;
            in_tree[u] = true;
            t.edges.push_back({std::min(u, v), std::max(u, v)});
            frontier.push(u);
        }
    }
    if (static_cast<int>(t.edges.size()) != g.vertex_count - 1)
        throw Error(ErrorCode::InfeasibleZ, "Z completion did not span the graph");
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

CutTree random_spanning_tree(const PolyhedralGraph& g, std::uint64_t seed) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    UndoableDsu dsu(g.vertex_count);
    CutTree t;
    for (int e : order)
        if (dsu.unite(g.edges[e].first, g.edges[e].second)) t.edges.push_back(g.edges[e]);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

bool is_spanning_tree(const PolyhedralGraph& g, const CutTree& t) {
    if (static_cast<int>(t.edges.size()) != g.vertex_count - 1) return false;
    UndoableDsu dsu(g.vertex_count);
    for (auto [u, v] : t.edges) {
        if (g.edge_index(u, v) < 0) return false;
        if (!dsu.unite(u, v)) return false;  // cycle
    }
    return true;  // n-1 acyclic edges over n vertices span
}

}  // namespace oforge
