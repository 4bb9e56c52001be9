#include "hermix/matching.hpp"

#include "hermix/error.hpp"

#include <algorithm>
#include <string>

namespace hermix {

namespace {

std::vector<int> require_bipartite(const MixedGraph& graph) {
    auto colors = two_coloring(graph);
    if (!colors) throw Error(ErrorCode::NotBipartite, "underlying graph contains an odd cycle");
    return *colors;
}

}  // namespace

Matching Matching::from_edges(const MixedGraph& host, std::vector<Edge> edges) {
    Matching m;
    m.partner_.assign(host.vertex_count(), unmatched);
    for (Edge& e : edges) {
        if (e.u >= host.vertex_count() || e.v >= host.vertex_count() || !host.adjacent(e.u, e.v)) {
            throw Error(ErrorCode::InvalidArgument,
                        "matching edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
        }
        if (m.partner_[e.u] != unmatched || m.partner_[e.v] != unmatched) {
            throw Error(ErrorCode::InvalidArgument,
                        "matching edges overlap at (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        m.partner_[e.u] = e.v;
        m.partner_[e.v] = e.u;
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    m.edges_ = std::move(edges);
    return m;
}

std::optional<Vertex> Matching::partner(Vertex v) const {
    if (v >= partner_.size() || partner_[v] == unmatched) return std::nullopt;
    return partner_[v];
}

bool Matching::contains(Vertex a, Vertex b) const {
    return a < partner_.size() && partner_[a] == b;
}

std::optional<Matching> find_perfect_matching(const MixedGraph& graph) {
    const auto color = require_bipartite(graph);
    const std::size_t n = graph.vertex_count();
    if (n % 2 != 0) return std::nullopt;

    const Vertex none = n;
    std::vector<Vertex> mate(n, none);
    std::vector<bool> visited;

    // Kuhn's augmenting path search from the colour-0 side.
    auto augment = [&](auto&& self, Vertex left) -> bool {
        for (Vertex right : graph.neighbors(left)) {
            if (visited[right]) continue;
            visited[right] = true;
            if (mate[right] == none || self(self, mate[right])) {
                mate[right] = left;
                mate[left] = right;
                return true;
            }
        }
        return false;
    };

    for (Vertex v = 0; v < n; ++v) {
        if (color[v] != 0 || mate[v] != none) continue;
        visited.assign(n, false);
        if (!augment(augment, v)) return std::nullopt;
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        if (mate[v] == none) return std::nullopt;
        if (v < mate[v]) edges.push_back({v, mate[v]});
    }
    return Matching::from_edges(graph, std::move(edges));
}

std::optional<Matching> unique_perfect_matching(const MixedGraph& graph) {
    require_bipartite(graph);
    const std::size_t n = graph.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<bool> alive(n, true);
    std::vector<Vertex> pendants;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = graph.degree(v);
        if (deg[v] == 0) return std::nullopt;
        if (deg[v] == 1) pendants.push_back(v);
    }
    std::vector<Edge> forced;
    std::size_t remaining = n;
    while (!pendants.empty()) {
        const Vertex v = pendants.back();
        pendants.pop_back();
        if (!alive[v]) continue;
        if (deg[v] == 0) return std::nullopt;
        Vertex u = n;
        for (Vertex w : graph.neighbors(v)) {
            if (alive[w]) {
                u = w;
                break;
            }
        }
        forced.push_back({v, u});
        alive[v] = alive[u] = false;
        remaining -= 2;
        for (Vertex w : graph.neighbors(u)) {
            if (!alive[w]) continue;
            if (--deg[w] == 0) return std::nullopt;
            if (deg[w] == 1) pendants.push_back(w);
        }
    }
    if (remaining != 0) return std::nullopt;
    return Matching::from_edges(graph, std::move(forced));
}

bool is_unique_perfect_matching(const MixedGraph& graph) {
    return unique_perfect_matching(graph).has_value();
}

bool has_alternating_cycle(const MixedGraph& graph, const Matching& matching) {
    if (!matching.is_perfect() || matching.vertex_count() != graph.vertex_count()) {
        throw Error(ErrorCode::NotPerfect, "alternating-cycle test needs a perfect matching of the graph");
    }
    const auto color = require_bipartite(graph);
    const std::size_t n = graph.vertex_count();

    // Non-matching edges point from colour 0 to colour 1, matching edges back.
    // Alternating cycles are exactly the directed cycles of this orientation.
    auto forward = [&](Vertex from, Vertex to) {
        return matching.contains(from, to) ? color[from] == 1 : color[from] == 0;
    };
    enum : unsigned char { fresh, active, done };
    std::vector<unsigned char> state(n, fresh);
    auto dfs = [&](auto&& self, Vertex v) -> bool {
        state[v] = active;
        for (Vertex w : graph.neighbors(v)) {
            if (!forward(v, w)) continue;
            if (state[w] == active) return true;
            if (state[w] == fresh && self(self, w)) return true;
        }
        state[v] = done;
        return false;
    };
    for (Vertex v = 0; v < n; ++v) {
        if (state[v] == fresh && dfs(dfs, v)) return true;
    }
    return false;
}

bool is_co_augmenting(const MixedPath& path, const Matching& matching) {
    const std::size_t edges = path.edge_count();
    if (edges == 0 || edges % 2 == 0) return false;
    for (std::size_t k = 0; k < edges; ++k) {
        const bool matched = matching.contains(path.vertices[k], path.vertices[k + 1]);
        if (matched != (k % 2 == 0)) return false;
    }
    return true;
}

std::vector<MixedPath> co_augmenting_paths(const MixedGraph& graph, const Matching& matching, Vertex i, Vertex j) {
    const std::size_t n = graph.vertex_count();
    if (i >= n || j >= n) throw Error(ErrorCode::BadVertexId, "path endpoint out of range");
    if (i == j) throw Error(ErrorCode::SameVertex, "path endpoints coincide at " + std::to_string(i));

    std::vector<MixedPath> paths;
    std::vector<bool> on_path(n, false);
    std::vector<Vertex> stack{i};
    on_path[i] = true;

    // The k-th edge (0-based) must be a matching edge exactly when k is even.
    auto dfs = [&](auto&& self, Vertex at) -> void {
        const bool want_matched = (stack.size() - 1) % 2 == 0;
        for (Vertex next : graph.neighbors(at)) {
            if (on_path[next] || matching.contains(at, next) != want_matched) continue;
            stack.push_back(next);
            if (next == j) {
                if (want_matched) paths.push_back(MixedPath{stack});
            } else {
                on_path[next] = true;
                self(self, next);
                on_path[next] = false;
            }
            stack.pop_back();
        }
    };
    dfs(dfs, i);
    return paths;
}

}  // namespace hermix
