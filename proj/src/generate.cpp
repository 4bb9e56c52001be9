#include "hermix/document.hpp"

#include "hermix/error.hpp"
#include "hermix/matching.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace hermix {

namespace {

constexpr int max_tree_attempts = 64;
constexpr int max_edge_attempts = 256;

std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

// Tree on n vertices in which vertex pairs (2k, 2k+1) form the unique perfect matching.
std::vector<Edge> matched_pair_tree(std::mt19937_64& rng, std::size_t n) {
    std::vector<Edge> edges{{0, 1}};
    for (Vertex a = 2; a < n; a += 2) {
        edges.push_back({a, a + 1});
        const Vertex anchor = pick(rng, a);
        edges.push_back(pick(rng, 2) == 0 ? Edge{anchor, a} : Edge{anchor, a + 1});
    }
    return edges;
}

}  // namespace

GraphDocument generate_instance(std::uint64_t seed, std::size_t n, bool unicyclic, unsigned alpha_order) {
    if (n < 2 || n % 2 != 0) {
        throw Error(ErrorCode::InvalidArgument, "generated instances need an even vertex count >= 2, got " + std::to_string(n));
    }
    if (alpha_order < 1) throw Error(ErrorCode::InvalidArgument, "alpha_order must be >= 1");
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < max_tree_attempts; ++attempt) {
        std::vector<Edge> edges = matched_pair_tree(rng, n);
        if (unicyclic) {
            const MixedGraph tree = build_graph(n, edges, {});
            const std::vector<int> colour = *two_coloring(tree);
            bool closed = false;
            for (int k = 0; k < max_edge_attempts && !closed; ++k) {
                const Vertex a = pick(rng, n);
                const Vertex b = pick(rng, n);
                if (a == b || colour[a] == colour[b] || tree.adjacent(a, b)) continue;
                std::vector<Edge> candidate = edges;
                candidate.push_back({std::min(a, b), std::max(a, b)});
                if (is_unique_perfect_matching(build_graph(n, candidate, {}))) {
                    edges = std::move(candidate);
                    closed = true;
                }
            }
            if (!closed) continue;
        }

        std::vector<Vertex> relabel(n);
        std::iota(relabel.begin(), relabel.end(), Vertex{0});
        std::shuffle(relabel.begin(), relabel.end(), rng);

        GraphDocument doc;
        doc.n = n;
        doc.alpha_order = alpha_order;
        for (const Edge& e : edges) {
            const Vertex u = relabel[e.u];
            const Vertex v = relabel[e.v];
            const bool matched = e.u / 2 == e.v / 2;
            if (matched || pick(rng, 2) == 0) {
                doc.digons.push_back({std::min(u, v), std::max(u, v)});
            } else if (pick(rng, 2) == 0) {
                doc.arcs.push_back({u, v});
            } else {
                doc.arcs.push_back({v, u});
            }
        }
        std::sort(doc.digons.begin(), doc.digons.end());
        std::sort(doc.arcs.begin(), doc.arcs.end());
        if (!is_unique_perfect_matching(to_graph(doc))) {
            throw Error(ErrorCode::InvariantViolation, "generated instance lost its unique perfect matching");
        }
        return doc;
    }
    throw Error(ErrorCode::GenerationFailed, "no instance found for seed " + std::to_string(seed) + ", n = " + std::to_string(n));
}

}  // namespace hermix
