#include "hermix/graph.hpp"

#include "hermix/error.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hermix {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_vertex(std::size_t n, Vertex v) {
    if (v >= n) {
        throw Error(ErrorCode::BadVertexId,
                    "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
    }
}

}  // namespace

EdgeKind MixedGraph::kind(Vertex u, Vertex v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    return kinds_[u * n_ + v];
}

std::span<const Vertex> MixedGraph::neighbors(Vertex v) const {
    check_vertex(n_, v);
    return adjacency_[v];
}

std::vector<Edge> MixedGraph::underlying_edges() const {
    std::vector<Edge> edges = digons_;
    for (const Edge& a : arcs_) edges.push_back({std::min(a.u, a.v), std::max(a.u, a.v)});
    std::sort(edges.begin(), edges.end());
    return edges;
}

MixedGraph build_graph(std::size_t n, std::vector<Edge> digons, std::vector<Edge> arcs) {
    MixedGraph g;
    g.n_ = n;
    g.kinds_.assign(n * n, EdgeKind::None);
    g.adjacency_.assign(n, {});

    auto claim = [&](Vertex u, Vertex v, EdgeKind forward, EdgeKind backward) {
        if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        check_vertex(n, u);
        check_vertex(n, v);
        if (g.kinds_[u * n + v] != EdgeKind::None) {
            throw Error(ErrorCode::DuplicateEdge, "pair " + pair_text(u, v) + " given more than once");
        }
        g.kinds_[u * n + v] = forward;
        g.kinds_[v * n + u] = backward;
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    };

    for (Edge& d : digons) {
        claim(d.u, d.v, EdgeKind::Digon, EdgeKind::Digon);
        if (d.u > d.v) std::swap(d.u, d.v);
    }
    for (const Edge& a : arcs) claim(a.u, a.v, EdgeKind::Forward, EdgeKind::Backward);

    std::sort(digons.begin(), digons.end());
    std::sort(arcs.begin(), arcs.end());
    g.digons_ = std::move(digons);
    g.arcs_ = std::move(arcs);
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    return g;
}

MixedGraph underlying(const MixedGraph& graph) {
    return build_graph(graph.vertex_count(), graph.underlying_edges(), {});
}

InducedSubgraph remove_vertices(const MixedGraph& graph, std::span<const Vertex> removed) {
    const std::size_t n = graph.vertex_count();
    std::vector<bool> gone(n, false);
    for (Vertex v : removed) {
        check_vertex(n, v);
        gone[v] = true;
    }
    InducedSubgraph result;
    std::vector<Vertex> new_id(n, n);
    for (Vertex v = 0; v < n; ++v) {
        if (!gone[v]) {
            new_id[v] = result.original.size();
            result.original.push_back(v);
        }
    }
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    for (const Edge& d : graph.digons()) {
        if (!gone[d.u] && !gone[d.v]) digons.push_back({new_id[d.u], new_id[d.v]});
    }
    for (const Edge& a : graph.arcs()) {
        if (!gone[a.u] && !gone[a.v]) arcs.push_back({new_id[a.u], new_id[a.v]});
    }
    result.graph = build_graph(result.original.size(), std::move(digons), std::move(arcs));
    return result;
}

MixedWalk reversed(const MixedWalk& walk) {
    return MixedWalk{{walk.vertices.rbegin(), walk.vertices.rend()}};
}

bool is_walk(const MixedGraph& graph, const MixedWalk& walk) {
    if (walk.vertices.empty()) return false;
    for (Vertex v : walk.vertices) {
        if (v >= graph.vertex_count()) return false;
    }
    for (std::size_t k = 0; k + 1 < walk.vertices.size(); ++k) {
        if (!graph.adjacent(walk.vertices[k], walk.vertices[k + 1])) return false;
    }
    return true;
}

bool is_path(const MixedGraph& graph, const MixedWalk& walk) {
    if (!is_walk(graph, walk)) return false;
    std::vector<Vertex> sorted = walk.vertices;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<MixedPath> enumerate_paths(const MixedGraph& graph, Vertex i, Vertex j) {
    const std::size_t n = graph.vertex_count();
    check_vertex(n, i);
    check_vertex(n, j);
    if (i == j) throw Error(ErrorCode::SameVertex, "path endpoints coincide at " + std::to_string(i));

    std::vector<MixedPath> paths;
    std::vector<bool> on_path(n, false);
    std::vector<Vertex> stack{i};
    on_path[i] = true;

    // Neighbors are visited in ascending order, so paths come out lexicographically sorted.
    auto dfs = [&](auto&& self, Vertex at) -> void {
        for (Vertex next : graph.neighbors(at)) {
            if (on_path[next]) continue;
            stack.push_back(next);
            if (next == j) {
                paths.push_back(MixedPath{stack});
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

bool Cycle::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        out.push_back({vertices[k], vertices[(k + 1) % vertices.size()]});
    }
    return out;
}

bool Cycle::has_edge(Vertex a, Vertex b) const {
    for (const Edge& e : edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    }
    return false;
}

Cycle canonical_cycle(std::vector<Vertex> seq) {
    if (seq.empty()) return {};
    auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    if (seq.size() > 2 && seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
    return Cycle{std::move(seq)};
}

bool is_connected(const MixedGraph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> todo{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        Vertex v = todo.back();
        todo.pop_back();
        for (Vertex w : graph.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                todo.push_back(w);
            }
        }
    }
    return reached == n;
}

Cycle unique_cycle(const MixedGraph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n == 0 || graph.edge_count() != n || !is_connected(graph)) {
        throw Error(ErrorCode::NotUnicyclic, "underlying graph must be connected with |E| = |V| (n = " +
                                                 std::to_string(n) + ", |E| = " +
                                                 std::to_string(graph.edge_count()) + ")");
    }
    // Strip leaves; what survives is the cycle.
    std::vector<std::size_t> deg(n);
    std::vector<bool> alive(n, true);
    std::queue<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = graph.degree(v);
        if (deg[v] == 1) leaves.push(v);
    }
    while (!leaves.empty()) {
        Vertex v = leaves.front();
        leaves.pop();
        alive[v] = false;
        for (Vertex w : graph.neighbors(v)) {
            if (alive[w] && --deg[w] == 1) leaves.push(w);
        }
    }
    Vertex start = n;
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) {
            start = v;
            break;
        }
    }
    std::vector<Vertex> seq{start};
    Vertex prev = n;
    Vertex at = start;
    while (true) {
        Vertex next = n;
        for (Vertex w : graph.neighbors(at)) {
            if (alive[w] && w != prev) {
                next = w;
                break;
            }
        }
        if (next == start || next == n) break;
        seq.push_back(next);
        prev = at;
        at = next;
    }
    return canonical_cycle(std::move(seq));
}

std::optional<std::vector<int>> two_coloring(const MixedGraph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<int> color(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<Vertex> todo{s};
        while (!todo.empty()) {
            Vertex v = todo.back();
            todo.pop_back();
            for (Vertex w : graph.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    todo.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

}  // namespace hermix
