#include "hermix/inverse.hpp"

#include "hermix/error.hpp"

#include <string>

namespace hermix {

namespace {

CyclotomicNumber nonzero_determinant(const MixedGraph& graph, const CyclotomicContext& ctx) {
    CyclotomicNumber det = det_via_elementary(graph, ctx);
    if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "det(H_alpha) = 0");
    return det;
}

CyclotomicNumber path_expansion(const MixedGraph& graph, const CyclotomicContext& ctx, Vertex i, Vertex j) {
    CyclotomicNumber sum(ctx);
    for (const MixedPath& path : enumerate_paths(graph, i, j)) {
        const auto rest = remove_vertices(graph, path.vertices);
        CyclotomicNumber minor = det_via_elementary(rest.graph, ctx);
        if (minor.is_zero()) continue;
        CyclotomicNumber term = walk_value(graph, ctx, path) * minor;
        sum += path.edge_count() % 2 == 0 ? term : -term;
    }
    return sum;
}

Matching require_class_h(const MixedGraph& graph) {
    auto matching = unique_perfect_matching(graph);
    if (!matching) throw Error(ErrorCode::NotInClassH, "graph does not have a unique perfect matching");
    return *matching;
}

}  // namespace

CyclotomicNumber inverse_entry_general(const MixedGraph& graph, const CyclotomicContext& ctx, Vertex i, Vertex j) {
    if (i == j) throw Error(ErrorCode::SameVertex, "path expansion covers off-diagonal entries only");
    const CyclotomicNumber det = nonzero_determinant(graph, ctx);
    return path_expansion(graph, ctx, i, j) / det;
}

CyclotomicNumber inverse_diagonal_by_minor(const MixedGraph& graph, const CyclotomicContext& ctx, Vertex i) {
    const CyclotomicNumber det = nonzero_determinant(graph, ctx);
    const Vertex removed[] = {i};
    return det_via_elementary(remove_vertices(graph, removed).graph, ctx) / det;
}

ExactMatrix inverse_general(const MixedGraph& graph, const CyclotomicContext& ctx) {
    const std::size_t n = graph.vertex_count();
    const CyclotomicNumber det_inv = inverse(nonzero_determinant(graph, ctx));
    ExactMatrix out(ctx, n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i == j) {
                const Vertex removed[] = {i};
                out.at(i, i) = det_via_elementary(remove_vertices(graph, removed).graph, ctx) * det_inv;
            } else {
                out.at(i, j) = path_expansion(graph, ctx, i, j) * det_inv;
            }
        }
    }
    return out;
}

InverseReport inverse_bipartite_upm(const MixedGraph& graph, const CyclotomicContext& ctx) {
    const std::size_t n = graph.vertex_count();
    InverseReport report{ExactMatrix(ctx, n), require_class_h(graph), {}};
    report.terms.resize(n * n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i == j) continue;
            auto& entry = report.matrix.at(i, j);
            for (MixedPath& path : co_augmenting_paths(graph, report.matching, i, j)) {
                const int sign = ((path.edge_count() - 1) / 2) % 2 == 0 ? 1 : -1;
                CyclotomicNumber value = walk_value(graph, ctx, path);
                entry += sign > 0 ? value : -value;
                report.terms[i * n + j].push_back(PathTerm{std::move(path), sign, std::move(value)});
            }
        }
    }
    return report;
}

MixedGraph orient_nonmatching(const MixedGraph& graph, const Matching& matching, ArcDirection direction) {
    if (!graph.is_all_digon()) throw Error(ErrorCode::HasArcs, "X_G is built from an undirected graph");
    if (!matching.is_perfect() || matching.vertex_count() != graph.vertex_count()) {
        throw Error(ErrorCode::NotPerfect, "X_G needs a perfect matching of the graph");
    }
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    for (const Edge& e : graph.digons()) {
        if (matching.contains(e.u, e.v)) {
            digons.push_back(e);
        } else if (direction == ArcDirection::LowToHigh) {
            arcs.push_back({e.u, e.v});
        } else {
            arcs.push_back({e.v, e.u});
        }
    }
    return build_graph(graph.vertex_count(), std::move(digons), std::move(arcs));
}

CountMatrix coaug_count_matrix(const MixedGraph& graph, const Matching& matching) {
    auto unique = unique_perfect_matching(graph);
    if (!unique || !(*unique == matching)) {
        throw Error(ErrorCode::NotInClassH, "graph must be bipartite with the given matching as its only perfect matching");
    }
    const std::size_t n = graph.vertex_count();
    CountMatrix counts(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i != j) counts.at(i, j) = co_augmenting_paths(graph, matching, i, j).size();
        }
    }
    return counts;
}

}  // namespace hermix
