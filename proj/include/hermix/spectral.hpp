#pragma once

#include "hermix/cyclotomic.hpp"
#include "hermix/graph.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace hermix {

// Dense square matrix over Q(zeta_n). Holds H_alpha, its inverse, and products of those.
class ExactMatrix {
public:
    ExactMatrix(const CyclotomicContext& ctx, std::size_t dim);

    static ExactMatrix identity(const CyclotomicContext& ctx, std::size_t dim);

    const CyclotomicContext& context() const noexcept { return *ctx_; }
    std::size_t dim() const noexcept { return dim_; }

    CyclotomicNumber& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const CyclotomicNumber& at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    // at(u, v) == conj(at(v, u)) for all u, v.
    bool is_hermitian() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    const CyclotomicContext* ctx_;
    std::size_t dim_;
    std::vector<CyclotomicNumber> data_;
};

struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> data;

    explicit ComplexMatrix(std::size_t d = 0) : dim(d), data(d * d) {}

    std::complex<double>& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

ComplexMatrix to_complex(const ExactMatrix& m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
// max_ij |a_ij - b_ij|
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

// 1 on digons, alpha at (u, v) for an arc u -> v, conj(alpha) at (v, u), 0 elsewhere.
ExactMatrix h_alpha_matrix(const MixedGraph& graph, const CyclotomicContext& ctx);

// Product of H_alpha entries along the walk. Throws Error{NotAWalk}.
CyclotomicNumber walk_value(const MixedGraph& graph, const CyclotomicContext& ctx, const MixedWalk& walk);

// Subgraph whose components are single edges or cycles.
struct ElementarySubgraph {
    std::vector<Edge> edges;    // K2 components, u < v
    std::vector<Cycle> cycles;  // canonical rotation
    std::size_t covered = 0;    // number of vertices touched

    std::size_t component_count() const noexcept { return edges.size() + cycles.size(); }
    std::size_t edge_total() const noexcept;
    // r = |V| - c
    std::size_t rank() const noexcept { return covered - component_count(); }
    // s = |E| - r, which is the number of cycle components
    std::size_t corank() const noexcept { return edge_total() - rank(); }
};

// Every spanning elementary subgraph, each once. Branches on the lowest uncovered vertex:
// either an incident edge, or a cycle through it among uncovered vertices.
std::vector<ElementarySubgraph> enumerate_spanning_elementary(const MixedGraph& graph);

// (-1)^r 2^s prod_C Re(h_alpha(C)) for one spanning elementary subgraph, each cycle
// walked in its canonical direction.
CyclotomicNumber elementary_term(const MixedGraph& graph, const CyclotomicContext& ctx,
                                 const ElementarySubgraph& sub);

// det(H_alpha) as the sum of elementary_term over all spanning elementary subgraphs.
CyclotomicNumber det_via_elementary(const MixedGraph& graph, const CyclotomicContext& ctx);

// Default cap for det_leibniz: 10, or HERMIX_MAX_LEIBNIZ when set to a positive integer.
std::size_t leibniz_dimension_cap();

// Permutation expansion, pruning zero entries. Throws Error{DimensionTooLarge} above max_dim.
CyclotomicNumber det_leibniz(const ExactMatrix& m, std::size_t max_dim = leibniz_dimension_cap());

inline constexpr double numeric_pivot_tolerance = 1e-10;
inline constexpr double numeric_residual_tolerance = 1e-9;

// Gauss-Jordan with partial pivoting on to_complex(m). Throws Error{NumericallySingular}
// when a pivot falls below numeric_pivot_tolerance, Error{InvariantViolation} when
// the residual max |H H^-1 - I| exceeds numeric_residual_tolerance.
ComplexMatrix numeric_inverse(const ExactMatrix& m);

// LU with partial pivoting; returns 0 when a pivot vanishes exactly.
std::complex<double> numeric_determinant(const ExactMatrix& m);

}  // namespace hermix
