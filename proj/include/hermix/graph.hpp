#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hermix {

using Vertex = std::size_t;

// Vertex pair. For digons the graph stores u < v; for arcs (u, v) is (initial, terminal).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

// Relation of an ordered vertex pair (u, v).
enum class EdgeKind : std::uint8_t {
    None,
    Digon,
    Forward,   // arc u -> v
    Backward,  // arc v -> u
};

// Mixed graph on vertices 0..n-1 with undirected digons and directed arcs.
// Immutable after construction.
class MixedGraph {
public:
    MixedGraph() = default;

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return digons_.size() + arcs_.size(); }

    // Sorted, each digon with u < v.
    const std::vector<Edge>& digons() const noexcept { return digons_; }
    // Sorted by (initial, terminal).
    const std::vector<Edge>& arcs() const noexcept { return arcs_; }

    EdgeKind kind(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return kind(u, v) != EdgeKind::None; }

    // Neighbors in the underlying graph, ascending.
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    // Edges of the underlying graph, each as (min, max), sorted.
    std::vector<Edge> underlying_edges() const;

    bool is_all_digon() const noexcept { return arcs_.empty(); }

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.n_ == b.n_ && a.digons_ == b.digons_ && a.arcs_ == b.arcs_;
    }

    friend MixedGraph build_graph(std::size_t n, std::vector<Edge> digons, std::vector<Edge> arcs);

private:
    std::size_t n_ = 0;
    std::vector<Edge> digons_;
    std::vector<Edge> arcs_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<EdgeKind> kinds_;  // n_ * n_, row-major
};

// Throws Error{SelfLoop | BadVertexId | DuplicateEdge}.
MixedGraph build_graph(std::size_t n, std::vector<Edge> digons, std::vector<Edge> arcs);

// Every arc replaced by a digon.
MixedGraph underlying(const MixedGraph& graph);

struct InducedSubgraph {
    MixedGraph graph;
    std::vector<Vertex> original;  // new id -> id in the source graph
};

// Induced subgraph on V \ removed, keeping edge types and orientation.
// Surviving vertices are renumbered in increasing order of their original ids.
InducedSubgraph remove_vertices(const MixedGraph& graph, std::span<const Vertex> removed);

struct MixedWalk {
    std::vector<Vertex> vertices;

    std::size_t edge_count() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    auto operator<=>(const MixedWalk&) const = default;
};

// A MixedWalk whose vertices are pairwise distinct.
using MixedPath = MixedWalk;

MixedWalk reversed(const MixedWalk& walk);
bool is_walk(const MixedGraph& graph, const MixedWalk& walk);
bool is_path(const MixedGraph& graph, const MixedWalk& walk);

// All simple paths i -> j in lexicographic order of vertex sequences.
// Depth-first with an on-path set; exponential in the worst case, intended for n <= ~20.
// Throws Error{SameVertex | BadVertexId}.
std::vector<MixedPath> enumerate_paths(const MixedGraph& graph, Vertex i, Vertex j);

// A cycle of the underlying graph, stored in canonical rotation: smallest vertex first,
// then its smaller cycle neighbor.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    bool contains(Vertex v) const;
    // Consecutive pairs (vertices[k], vertices[k+1 mod len]) in traversal order.
    std::vector<Edge> edges() const;
    bool has_edge(Vertex a, Vertex b) const;

    auto operator<=>(const Cycle&) const = default;
};

// Rotates/reflects a cyclic vertex sequence into canonical form.
Cycle canonical_cycle(std::vector<Vertex> cyclic_sequence);

// Throws Error{NotUnicyclic} unless the underlying graph is connected with |E| = |V|.
Cycle unique_cycle(const MixedGraph& graph);

bool is_connected(const MixedGraph& graph);

// Proper 2-colouring of the underlying graph, or nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const MixedGraph& graph);

}  // namespace hermix
