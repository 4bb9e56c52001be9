#pragma once

#include "hermix/graph.hpp"

#include <optional>
#include <vector>

namespace hermix {

// Vertex-disjoint set of edges of a host graph, with a partner lookup.
class Matching {
public:
    Matching() = default;

    // Throws Error{InvalidArgument} if an edge is missing from the host or edges overlap.
    static Matching from_edges(const MixedGraph& host, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return partner_.size(); }
    // Sorted, each edge with u < v.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::optional<Vertex> partner(Vertex v) const;
    bool contains(Vertex a, Vertex b) const;
    bool is_perfect() const noexcept { return 2 * edges_.size() == partner_.size(); }

    bool operator==(const Matching& other) const { return edges_ == other.edges_ && partner_ == other.partner_; }

private:
    static constexpr Vertex unmatched = static_cast<Vertex>(-1);

    std::vector<Edge> edges_;
    std::vector<Vertex> partner_;
};

// Maximum matching by augmenting paths; nullopt unless it is perfect.
// Throws Error{NotBipartite}.
std::optional<Matching> find_perfect_matching(const MixedGraph& graph);

// Iterated pendant elimination: repeatedly match a degree-1 vertex with its only neighbour.
// Returns the forced matching when this exhausts the graph, which happens exactly when the
// bipartite graph has a unique perfect matching. Throws Error{NotBipartite}.
std::optional<Matching> unique_perfect_matching(const MixedGraph& graph);

// Membership in the class of bipartite graphs with a unique perfect matching.
bool is_unique_perfect_matching(const MixedGraph& graph);

// True iff some cycle alternates between edges of `matching` and edges outside it.
// Throws Error{NotPerfect | NotBipartite}.
bool has_alternating_cycle(const MixedGraph& graph, const Matching& matching);

// Edges alternate matching / non-matching, first and last edge in the matching.
// A single matching edge qualifies.
bool is_co_augmenting(const MixedPath& path, const Matching& matching);

// Co-augmenting simple paths i -> j, lexicographic order. Throws Error{SameVertex}.
std::vector<MixedPath> co_augmenting_paths(const MixedGraph& graph, const Matching& matching, Vertex i, Vertex j);

}  // namespace hermix
