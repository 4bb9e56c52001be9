#pragma once

#include "hermix/cyclotomic.hpp"
#include "hermix/graph.hpp"
#include "hermix/matching.hpp"
#include "hermix/spectral.hpp"

#include <cstddef>
#include <vector>

namespace hermix {

// Off-diagonal entry of H_alpha^-1 for an arbitrary mixed graph, expanded over all
// i -> j paths P:  (1/det) sum_P (-1)^|E(P)| h_alpha(P) det(H_alpha(X \ P)),
// with every determinant taken through the spanning elementary subgraph expansion.
// Throws Error{SameVertex | SingularMatrix}.
CyclotomicNumber inverse_entry_general(const MixedGraph& graph, const CyclotomicContext& ctx, Vertex i, Vertex j);

// Diagonal entry det(H_alpha(X \ {i})) / det(H_alpha(X)). Throws Error{SingularMatrix}.
CyclotomicNumber inverse_diagonal_by_minor(const MixedGraph& graph, const CyclotomicContext& ctx, Vertex i);

// Full inverse from the two routines above. Throws Error{SingularMatrix}.
ExactMatrix inverse_general(const MixedGraph& graph, const CyclotomicContext& ctx);

// One co-augmenting path's contribution sign * value to an inverse entry.
struct PathTerm {
    MixedPath path;
    int sign = 1;            // (-1)^((|E(P)| - 1) / 2)
    CyclotomicNumber value;  // h_alpha(P)
};

struct InverseReport {
    ExactMatrix matrix;
    Matching matching;
    std::vector<std::vector<PathTerm>> terms;  // row-major, dim * dim; empty on the diagonal

    const std::vector<PathTerm>& terms_for(Vertex i, Vertex j) const { return terms[i * matrix.dim() + j]; }
};

// Closed form for bipartite graphs with a unique perfect matching: entry (i, j) is the signed
// sum of h_alpha over co-augmenting i -> j paths, and the diagonal vanishes.
// Throws Error{NotBipartite | NotInClassH}.
InverseReport inverse_bipartite_upm(const MixedGraph& graph, const CyclotomicContext& ctx);

enum class ArcDirection { LowToHigh, HighToLow };

// X_G: matching digons kept, every other digon turned into an arc.
// Throws Error{HasArcs | NotPerfect}.
MixedGraph orient_nonmatching(const MixedGraph& graph, const Matching& matching,
                              ArcDirection direction = ArcDirection::LowToHigh);

struct CountMatrix {
    std::size_t dim = 0;
    std::vector<std::size_t> data;

    explicit CountMatrix(std::size_t d = 0) : dim(d), data(d * d, 0) {}
    std::size_t& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    std::size_t at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

// Number of co-augmenting i -> j paths; equals H_{-1}(X_G)^-1. Throws Error{NotInClassH}.
CountMatrix coaug_count_matrix(const MixedGraph& graph, const Matching& matching);

}  // namespace hermix
