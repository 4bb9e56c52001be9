#pragma once

// Shared fixtures for the test executables: desk graphs, random instances, and oracles that
// share no code with the library beyond MixedGraph itself.

#include "hermix/cyclotomic.hpp"
#include "hermix/document.hpp"
#include "hermix/graph.hpp"
#include "hermix/matching.hpp"
#include "hermix/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

namespace hermix::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// ---- desk graphs ---------------------------------------------------------------------

inline MixedGraph digons_only(std::size_t n, std::vector<Edge> edges) { return build_graph(n, std::move(edges), {}); }

inline MixedGraph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return digons_only(n, e);
}

inline MixedGraph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    e.push_back({0, n - 1});
    return digons_only(n, e);
}

// Cycle v1..v6 = 0..5, pendant p1 = 6 at v1 and p4 = 7 at v4.
// Unique matching {0-6, 1-2, 3-7, 4-5}.
inline MixedGraph c6_two_pegs() {
    return digons_only(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {3, 7}});
}

// Cycle 0..3 with a pendant k+4 at every cycle vertex k.
inline MixedGraph c4_four_pegs() {
    return digons_only(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Cycle v1..v6 = 0..5 with pendants 6..9 at v1..v4; v5-v6 is the only matched cycle edge.
inline MixedGraph c6_four_pegs_odd() {
    return digons_only(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {1, 7}, {2, 8}, {3, 9}});
}

// Same shape as c6_two_pegs but with cycle arcs chosen so that the closed walk
// 0,1,2,3,4,5,0 has value alpha^k for k in {0, 1, 2}.
inline MixedGraph c6_two_pegs_twisted(unsigned k) {
    std::vector<Edge> digons{{2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {3, 7}};
    std::vector<Edge> arcs;
    if (k >= 1) {
        arcs.push_back({0, 1});
    } else {
        digons.push_back({0, 1});
    }
    if (k >= 2) {
        arcs.push_back({1, 2});
    } else {
        digons.push_back({1, 2});
    }
    return build_graph(8, digons, arcs);
}

// 8 vertices, unique perfect matching {0-1, 2-3, 4-5, 6-7}, a 5-cycle 1-2-3-4-5 carrying the
// single arc 1 -> 2, and a separate edge 6-7. Removing vertex 0 leaves exactly one spanning
// elementary subgraph (the 5-cycle plus 6-7).
inline MixedGraph odd_cycle_witness() {
    return build_graph(8, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 7}}, {{1, 2}});
}

// ---- random instances ----------------------------------------------------------------

// Each vertex pair independently becomes an edge with probability `density`; each edge is an
// arc of random direction with probability `arc_share`.
inline MixedGraph random_mixed_graph(Rng& rng, std::size_t n, double density, double arc_share) {
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!coin(rng, density)) continue;
            if (!coin(rng, arc_share)) {
                digons.push_back({u, v});
            } else if (coin(rng)) {
                arcs.push_back({u, v});
            } else {
                arcs.push_back({v, u});
            }
        }
    }
    return build_graph(n, digons, arcs);
}

// Random bipartite graph: vertices split by parity of a random colouring.
inline MixedGraph random_bipartite_graph(Rng& rng, std::size_t n, double density, double arc_share) {
    std::vector<int> side(n);
    for (auto& s : side) s = coin(rng) ? 1 : 0;
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (side[u] == side[v] || !coin(rng, density)) continue;
            if (!coin(rng, arc_share)) {
                digons.push_back({u, v});
            } else if (coin(rng)) {
                arcs.push_back({u, v});
            } else {
                arcs.push_back({v, u});
            }
        }
    }
    return build_graph(n, digons, arcs);
}

inline MixedGraph relabel(const MixedGraph& g, const std::vector<Vertex>& to) {
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    for (const Edge& e : g.digons()) digons.push_back({std::min(to[e.u], to[e.v]), std::max(to[e.u], to[e.v])});
    for (const Edge& e : g.arcs()) arcs.push_back({to[e.u], to[e.v]});
    return build_graph(g.vertex_count(), digons, arcs);
}

inline std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

enum class UnicyclicClass { Similar, OddParity, TwoPegs };

// Unicyclic graph with a unique perfect matching whose characterization class is fixed in
// advance: a cycle of length 2m, k pairwise disjoint matched cycle edges, a pendant peg at
// every other cycle vertex, then `extra_pairs` matched pairs hung off random vertices.
// Every edge becomes an arc of random direction with probability 1/2; vertices are shuffled.
inline MixedGraph random_unicyclic(Rng& rng, UnicyclicClass cls, std::size_t m, std::size_t extra_pairs) {
    const std::size_t len = 2 * m;
    std::size_t k = 0;
    if (cls == UnicyclicClass::TwoPegs) {
        k = m - 1;
    } else {
        // pegs = 2m - 2k > 2 and the non-matching cycle edge count 2m - k has the wanted parity
        std::vector<std::size_t> options;
        for (std::size_t c = 0; c + 2 <= m; ++c) {
            if ((c % 2 == 0) == (cls == UnicyclicClass::Similar)) options.push_back(c);
        }
        k = options[uniform(rng, 0, options.size() - 1)];
    }

    // k disjoint cycle edges out of len: choose gaps around the cycle.
    std::vector<bool> matched_edge(len, false);
    while (true) {
        std::fill(matched_edge.begin(), matched_edge.end(), false);
        std::vector<std::size_t> order(len);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        std::size_t placed = 0;
        for (std::size_t e : order) {
            if (placed == k) break;
            if (matched_edge[(e + len - 1) % len] || matched_edge[(e + 1) % len]) continue;
            matched_edge[e] = true;
            ++placed;
        }
        if (placed == k) break;
    }

    std::vector<Edge> edges;
    std::vector<bool> covered(len, false);
    for (Vertex v = 0; v < len; ++v) {
        edges.push_back({v, (v + 1) % len});
        if (matched_edge[v]) covered[v] = covered[(v + 1) % len] = true;
    }
    Vertex next = len;
    for (Vertex v = 0; v < len; ++v) {
        if (!covered[v]) edges.push_back({v, next++});
    }
    for (std::size_t p = 0; p < extra_pairs; ++p) {
        const Vertex anchor = uniform(rng, 0, next - 1);
        edges.push_back({anchor, next});
        edges.push_back({next, next + 1});
        next += 2;
    }

    const std::vector<Vertex> to = random_permutation(rng, next);
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    for (const Edge& e : edges) {
        const Vertex a = to[e.u];
        const Vertex b = to[e.v];
        if (coin(rng)) {
            digons.push_back({std::min(a, b), std::max(a, b)});
        } else {
            arcs.push_back({a, b});
        }
    }
    return build_graph(next, digons, arcs);
}

// Generated class-H instance of even order n in [lo, hi]. Unicyclic ones need n >= 6.
inline MixedGraph generated_instance(Rng& rng, std::size_t lo, std::size_t hi, bool unicyclic) {
    if (unicyclic) lo = std::max<std::size_t>(lo, 6);
    const std::size_t n = 2 * uniform(rng, lo / 2, std::max(lo, hi) / 2);
    return to_graph(generate_instance(rng(), n, unicyclic));
}

// ---- oracles -------------------------------------------------------------------------

// Number of perfect matchings of the underlying graph by exhaustive search.
inline std::size_t count_perfect_matchings(const MixedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> used(n, false);
    std::size_t count = 0;
    auto rec = [&](auto&& self) -> void {
        Vertex v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) {
            ++count;
            return;
        }
        used[v] = true;
        for (Vertex w = v + 1; w < n; ++w) {
            if (used[w] || !g.adjacent(v, w)) continue;
            used[w] = true;
            self(self);
            used[w] = false;
        }
        used[v] = false;
    };
    rec(rec);
    return count;
}

// Every perfect matching, as sorted edge lists.
inline std::vector<std::vector<Edge>> all_perfect_matchings(const MixedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> used(n, false);
    std::vector<Edge> current;
    std::vector<std::vector<Edge>> out;
    auto rec = [&](auto&& self) -> void {
        Vertex v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) {
            out.push_back(current);
            return;
        }
        used[v] = true;
        for (Vertex w = v + 1; w < n; ++w) {
            if (used[w] || !g.adjacent(v, w)) continue;
            used[w] = true;
            current.push_back({v, w});
            self(self);
            current.pop_back();
            used[w] = false;
        }
        used[v] = false;
    };
    rec(rec);
    return out;
}

// Spanning elementary subgraphs counted over every edge subset: each vertex has degree 1 or 2,
// and every component is a single edge or a cycle. Needs |E| <= ~20.
inline std::size_t count_spanning_elementary(const MixedGraph& g) {
    const auto edges = g.underlying_edges();
    const std::size_t n = g.vertex_count();
    const std::size_t m = edges.size();
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::vector<Vertex>> adj(n);
        for (std::size_t e = 0; e < m; ++e) {
            if ((mask >> e) & 1U) {
                adj[edges[e].u].push_back(edges[e].v);
                adj[edges[e].v].push_back(edges[e].u);
            }
        }
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) ok = adj[v].size() == 1 || adj[v].size() == 2;
        if (!ok) continue;
        std::vector<bool> seen(n, false);
        for (Vertex s = 0; s < n && ok; ++s) {
            if (seen[s]) continue;
            std::vector<Vertex> stack{s};
            seen[s] = true;
            std::size_t verts = 0;
            std::size_t degree_sum = 0;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                ++verts;
                degree_sum += adj[v].size();
                for (Vertex w : adj[v]) {
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
            const std::size_t comp_edges = degree_sum / 2;
            ok = (verts == 2 && comp_edges == 1) || (verts >= 3 && comp_edges == verts);
        }
        if (ok) ++count;
    }
    return count;
}

// All simple i -> j paths: every ordered selection of distinct intermediate vertices, checked
// for adjacency. Exponential in n; for n <= 8.
inline std::vector<MixedPath> paths_by_permutation(const MixedGraph& g, Vertex i, Vertex j) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v) {
        if (v != i && v != j) others.push_back(v);
    }
    std::vector<MixedPath> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
        std::vector<Vertex> inner;
        for (std::size_t k = 0; k < others.size(); ++k) {
            if ((mask >> k) & 1U) inner.push_back(others[k]);
        }
        do {
            MixedPath p;
            p.vertices.push_back(i);
            p.vertices.insert(p.vertices.end(), inner.begin(), inner.end());
            p.vertices.push_back(j);
            bool ok = true;
            for (std::size_t k = 0; k + 1 < p.vertices.size() && ok; ++k) ok = g.adjacent(p.vertices[k], p.vertices[k + 1]);
            if (ok) out.push_back(p);
        } while (std::next_permutation(inner.begin(), inner.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// H_alpha built directly in floating point from the edge lists.
inline std::vector<std::complex<double>> numeric_h(const MixedGraph& g, unsigned order) {
    const std::size_t n = g.vertex_count();
    const std::complex<double> a = std::polar(1.0, 2.0 * std::numbers::pi / order);
    std::vector<std::complex<double>> h(n * n);
    for (const Edge& e : g.digons()) h[e.u * n + e.v] = h[e.v * n + e.u] = 1.0;
    for (const Edge& e : g.arcs()) {
        h[e.u * n + e.v] = a;
        h[e.v * n + e.u] = std::conj(a);
    }
    return h;
}

// Permutation expansion in floating point; n <= 9.
inline std::complex<double> numeric_leibniz(const std::vector<std::complex<double>>& h, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::complex<double> total = 0;
    do {
        std::complex<double> term = 1;
        for (std::size_t r = 0; r < n && term != 0.0; ++r) term *= h[r * n + perm[r]];
        if (term == 0.0) continue;
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
        }
        total += inversions % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace hermix::testing
