#pragma once

#include "hermix/cyclotomic.hpp"
#include "hermix/graph.hpp"
#include "hermix/matching.hpp"
#include "hermix/spectral.hpp"

#include <optional>
#include <vector>

namespace hermix {

// A peg is a matching edge that is not a cycle edge but touches the cycle.
struct Peg {
    Vertex on_cycle = 0;
    Vertex off_cycle = 0;

    auto operator<=>(const Peg&) const = default;
};

struct PegInfo {
    std::vector<Peg> pegs;  // ordered by position of on_cycle along the canonical cycle
    Cycle cycle;
    std::size_t unmatched_cycle_edges = 0;
    std::size_t half_length = 0;  // m with |C| = 2m

    bool even_parity() const noexcept { return unmatched_cycle_edges % 2 == 0; }
};

// Throws Error{NotUnicyclic | NotInClassH}; `matching` must be the graph's unique perfect matching.
PegInfo peg_info(const MixedGraph& graph, const Matching& matching);

// f_W: +1 at the first vertex, flipping across every non-matching step. Throws Error{NotAWalk}.
std::vector<int> f_walk(const MixedGraph& graph, const Matching& matching, const MixedWalk& walk);

// w(v) = f_W(v) along any path W from the basepoint; D_u = diag(w).
struct DiagonalSigns {
    std::vector<int> signs;
    Vertex basepoint = 0;

    std::size_t size() const noexcept { return signs.size(); }
};

// Throws Error{BadVertexId | Disconnected | OddCycleParity}. The last one fires when some
// cycle carries an odd number of non-matching edges, so w depends on the route taken.
DiagonalSigns sign_assignment(const MixedGraph& graph, const Matching& matching, Vertex basepoint);

// D_u A(G) D_u == H_{-1}(X_G), exactly. `graph` must be undirected.
bool check_her(const MixedGraph& graph, const Matching& matching, Vertex basepoint);

// The two routes around the cycle between the attachment vertices v, v'. Both run v -> v'.
struct CycleSplit {
    MixedPath along;       // the cycle part of the given co-augmenting path
    MixedPath complement;  // the other way round
};

struct TwoPegBreakdown {
    MixedPath to_cycle;    // x -> v
    CycleSplit split;
    MixedPath from_cycle;  // v' -> y
    std::size_t half_length = 0;
    int sign = 1;                  // (-1)^((|E(P)| - 1) / 2)
    CyclotomicNumber prefactor;    // h(x -> v) h(F_{v -> v'}) h(v' -> y)
    CyclotomicNumber cycle_value;  // h over v -> F^c -> v' -> F reversed -> v
    CyclotomicNumber bracket;      // (-1)^(m+1) h(C) + 1
    CyclotomicNumber value;        // sign * prefactor * bracket
};

// Closed form of (H_alpha^-1)_{xy} for a unicyclic graph with exactly two pegs, where `path`
// is one of the two co-augmenting x -> y paths.
// Throws Error{NotUnicyclic | NotInClassH | NotTwoPegs | NoDoublePath}.
TwoPegBreakdown two_peg_breakdown(const MixedGraph& graph, const CyclotomicContext& ctx, const MixedPath& path);
CyclotomicNumber two_peg_entry(const MixedGraph& graph, const CyclotomicContext& ctx, const MixedPath& path);

// D M D for D = diag(signs).
ExactMatrix conjugate_by_signs(const ExactMatrix& m, const std::vector<int>& signs);

// The mixed graph whose H_alpha equals m, if m is hermitian with zero diagonal and
// entries in {0, 1, alpha, conj(alpha)}.
std::optional<MixedGraph> graph_from_hermitian_adjacency(const ExactMatrix& m);

inline constexpr std::size_t exhaustive_similarity_max_dim = 16;

// Tries every sign vector with the first sign fixed to +1 (2^(dim-1) candidates) and
// returns the first D for which D m D is a hermitian adjacency matrix of a mixed graph.
// Throws Error{DimensionTooLarge}.
std::optional<DiagonalSigns> exhaustive_diag_similarity(const ExactMatrix& m);

enum class NotSimilarReason { TwoPegs, OddParity };

struct GammaSimilarity {
    bool similar = false;
    std::optional<NotSimilarReason> reason;
    PegInfo pegs;
    std::optional<DiagonalSigns> signs;     // D_u when similar
    std::optional<ExactMatrix> conjugated;  // D_u H_gamma^-1 D_u when similar
    std::optional<MixedGraph> certificate;  // the mixed graph realised by `conjugated`
};

// Unicyclic graphs with a unique perfect matching: H_gamma^-1 is +-1 diagonally similar to a
// gamma-hermitian adjacency matrix iff there are more than two pegs and the cycle has an even
// number of non-matching edges. On success the certificate D_u is built and verified.
// Throws Error{NotUnicyclic | NotInClassH | NotBipartite}, or Error{InvariantViolation} if a
// constructed certificate fails verification.
GammaSimilarity classify_gamma_similarity(const MixedGraph& graph, Vertex basepoint = 0);

}  // namespace hermix
