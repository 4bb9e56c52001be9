#include "hermix/unicyclic.hpp"

#include "hermix/error.hpp"
#include "hermix/inverse.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace hermix {

namespace {

Matching require_unique_matching(const MixedGraph& graph) {
    auto matching = unique_perfect_matching(graph);
    if (!matching) throw Error(ErrorCode::NotInClassH, "graph does not have a unique perfect matching");
    return *matching;
}

bool is_adjacency_value(const CyclotomicNumber& x) {
    const EntryClass cls = classify_entry(x);
    if (cls.kind == EntryClass::Kind::Zero) return true;
    if (cls.kind != EntryClass::Kind::SignedPower || cls.sign != 1) return false;
    const unsigned n = x.context().order();
    return cls.exponent == 0 || cls.exponent == 1 % n || cls.exponent == (n - 1) % n;
}

MixedPath slice(const MixedPath& path, std::size_t first, std::size_t last) {
    return MixedPath{{path.vertices.begin() + static_cast<std::ptrdiff_t>(first),
                      path.vertices.begin() + static_cast<std::ptrdiff_t>(last) + 1}};
}

}  // namespace

PegInfo peg_info(const MixedGraph& graph, const Matching& matching) {
    PegInfo info;
    info.cycle = unique_cycle(graph);
    const Matching unique = require_unique_matching(graph);
    if (!(unique == matching)) throw Error(ErrorCode::NotInClassH, "matching is not the unique perfect matching");

    for (Vertex v : info.cycle.vertices) {
        const Vertex p = *matching.partner(v);
        if (!info.cycle.contains(p)) info.pegs.push_back({v, p});
    }
    for (const Edge& e : info.cycle.edges()) {
        if (!matching.contains(e.u, e.v)) ++info.unmatched_cycle_edges;
    }
    info.half_length = info.cycle.length() / 2;
    return info;
}

std::vector<int> f_walk(const MixedGraph& graph, const Matching& matching, const MixedWalk& walk) {
    if (!is_walk(graph, walk)) throw Error(ErrorCode::NotAWalk, "consecutive vertices must be adjacent");
    std::vector<int> signs{1};
    for (std::size_t k = 0; k + 1 < walk.vertices.size(); ++k) {
        const bool matched = matching.contains(walk.vertices[k], walk.vertices[k + 1]);
        signs.push_back(matched ? signs.back() : -signs.back());
    }
    return signs;
}

DiagonalSigns sign_assignment(const MixedGraph& graph, const Matching& matching, Vertex basepoint) {
    const std::size_t n = graph.vertex_count();
    if (basepoint >= n) throw Error(ErrorCode::BadVertexId, "basepoint " + std::to_string(basepoint) + " out of range");
    if (!is_connected(graph)) throw Error(ErrorCode::Disconnected, "sign assignment needs a connected graph");

    DiagonalSigns d{std::vector<int>(n, 0), basepoint};
    d.signs[basepoint] = 1;
    std::vector<Vertex> todo{basepoint};
    while (!todo.empty()) {
        const Vertex v = todo.back();
        todo.pop_back();
        for (Vertex w : graph.neighbors(v)) {
            if (d.signs[w] != 0) continue;
            d.signs[w] = matching.contains(v, w) ? d.signs[v] : -d.signs[v];
            todo.push_back(w);
        }
    }
    // Non-tree edges close cycles; each must agree with the route already taken.
    for (const Edge& e : graph.underlying_edges()) {
        const int expected = matching.contains(e.u, e.v) ? 1 : -1;
        if (d.signs[e.u] * d.signs[e.v] != expected) {
            throw Error(ErrorCode::OddCycleParity, "a cycle through edge (" + std::to_string(e.u) + "," +
                                                       std::to_string(e.v) +
                                                       ") has an odd number of non-matching edges");
        }
    }
    return d;
}

ExactMatrix conjugate_by_signs(const ExactMatrix& m, const std::vector<int>& signs) {
    if (signs.size() != m.dim()) throw Error(ErrorCode::InvalidArgument, "sign vector length differs from dimension");
    ExactMatrix out = m;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (signs[i] * signs[j] < 0) out.at(i, j) = -out.at(i, j);
        }
    }
    return out;
}

bool check_her(const MixedGraph& graph, const Matching& matching, Vertex basepoint) {
    const auto& minus_one = CyclotomicContext::of(2);
    const DiagonalSigns d = sign_assignment(graph, matching, basepoint);
    const ExactMatrix lhs = conjugate_by_signs(h_alpha_matrix(graph, minus_one), d.signs);
    const ExactMatrix rhs = h_alpha_matrix(orient_nonmatching(graph, matching), minus_one);
    return lhs == rhs;
}

TwoPegBreakdown two_peg_breakdown(const MixedGraph& graph, const CyclotomicContext& ctx, const MixedPath& path) {
    const Matching matching = require_unique_matching(graph);
    const PegInfo info = peg_info(graph, matching);
    if (info.pegs.size() != 2) {
        throw Error(ErrorCode::NotTwoPegs, "graph has " + std::to_string(info.pegs.size()) + " pegs");
    }
    if (path.vertices.size() < 2 || !is_path(graph, path) || !is_co_augmenting(path, matching)) {
        throw Error(ErrorCode::InvalidArgument, "expected a co-augmenting path of the graph");
    }
    const auto paths = co_augmenting_paths(graph, matching, path.front(), path.back());
    if (paths.size() != 2 || std::find(paths.begin(), paths.end(), path) == paths.end()) {
        throw Error(ErrorCode::NoDoublePath, "endpoints are joined by " + std::to_string(paths.size()) +
                                                 " co-augmenting paths, expected 2");
    }

    const Cycle& cycle = info.cycle;
    const auto& vs = path.vertices;
    std::size_t first = vs.size();
    std::size_t last = 0;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (cycle.contains(vs[k])) {
            first = std::min(first, k);
            last = k;
        }
    }
    if (first == vs.size() || first == last) {
        throw Error(ErrorCode::InvariantViolation, "double co-augmenting path does not traverse the cycle");
    }
    for (std::size_t k = first; k <= last; ++k) {
        if (!cycle.contains(vs[k])) throw Error(ErrorCode::InvariantViolation, "path leaves and re-enters the cycle");
    }

    TwoPegBreakdown out{slice(path, 0, first),
                        {slice(path, first, last), {}},
                        slice(path, last, vs.size() - 1),
                        info.half_length,
                        ((path.edge_count() - 1) / 2) % 2 == 0 ? 1 : -1,
                        CyclotomicNumber(ctx),
                        CyclotomicNumber(ctx),
                        CyclotomicNumber(ctx),
                        CyclotomicNumber(ctx)};

    // Walk the cycle from v to v' in the direction the path does not use.
    const std::size_t len = cycle.length();
    const auto pos = [&](Vertex v) {
        return static_cast<std::size_t>(std::find(cycle.vertices.begin(), cycle.vertices.end(), v) -
                                        cycle.vertices.begin());
    };
    const Vertex v = vs[first];
    const Vertex v_end = vs[last];
    const bool path_goes_forward = cycle.vertices[(pos(v) + 1) % len] == vs[first + 1];
    std::size_t at = pos(v);
    out.split.complement.vertices.push_back(v);
    while (cycle.vertices[at] != v_end) {
        at = path_goes_forward ? (at + len - 1) % len : (at + 1) % len;
        out.split.complement.vertices.push_back(cycle.vertices[at]);
    }

    MixedWalk closed = out.split.complement;
    for (std::size_t k = out.split.along.vertices.size() - 1; k-- > 0;) {
        closed.vertices.push_back(out.split.along.vertices[k]);
    }

    out.prefactor = walk_value(graph, ctx, out.to_cycle) * walk_value(graph, ctx, out.split.along) *
                    walk_value(graph, ctx, out.from_cycle);
    out.cycle_value = walk_value(graph, ctx, closed);
    const CyclotomicNumber one(ctx, 1L);
    out.bracket = (info.half_length % 2 == 1 ? out.cycle_value : -out.cycle_value) + one;
    out.value = out.prefactor * out.bracket;
    if (out.sign < 0) out.value = -out.value;
    return out;
}

CyclotomicNumber two_peg_entry(const MixedGraph& graph, const CyclotomicContext& ctx, const MixedPath& path) {
    return two_peg_breakdown(graph, ctx, path).value;
}

std::optional<MixedGraph> graph_from_hermitian_adjacency(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    const unsigned order = m.context().order();
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.at(i, i).is_zero()) return std::nullopt;
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& x = m.at(i, j);
            if (!is_adjacency_value(x) || !(m.at(j, i) == conj(x))) return std::nullopt;
            const EntryClass cls = classify_entry(x);
            if (cls.kind == EntryClass::Kind::Zero) continue;
            if (cls.exponent == 0) {
                digons.push_back({i, j});
            } else if (cls.exponent == 1 % order) {
                arcs.push_back({i, j});
            } else {
                arcs.push_back({j, i});
            }
        }
    }
    return build_graph(n, std::move(digons), std::move(arcs));
}

std::optional<DiagonalSigns> exhaustive_diag_similarity(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    if (n > exhaustive_similarity_max_dim) {
        throw Error(ErrorCode::DimensionTooLarge, "exhaustive sign search capped at dimension " +
                                                      std::to_string(exhaustive_similarity_max_dim));
    }
    if (n == 0) return DiagonalSigns{{}, 0};

    // Each nonzero entry admits sign products s with s * m(i, j) an adjacency value.
    struct Constraint {
        std::size_t i, j;
        int product;
    };
    std::vector<Constraint> constraints;
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.at(i, i).is_zero()) return std::nullopt;
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& x = m.at(i, j);
            if (x.is_zero()) continue;
            if (!(m.at(j, i) == conj(x))) return std::nullopt;
            const bool plus = is_adjacency_value(x);
            const bool minus = is_adjacency_value(-x);
            if (!plus && !minus) return std::nullopt;
            if (plus && minus) continue;
            constraints.push_back({i, j, plus ? 1 : -1});
        }
    }

    const std::uint64_t candidates = std::uint64_t{1} << (n - 1);
    std::vector<int> signs(n, 1);
    for (std::uint64_t mask = 0; mask < candidates; ++mask) {
        for (std::size_t k = 1; k < n; ++k) signs[k] = (mask >> (k - 1)) & 1U ? -1 : 1;
        const bool ok = std::all_of(constraints.begin(), constraints.end(),
                                    [&](const Constraint& c) { return signs[c.i] * signs[c.j] == c.product; });
        if (ok) return DiagonalSigns{signs, 0};
    }
    return std::nullopt;
}

GammaSimilarity classify_gamma_similarity(const MixedGraph& graph, Vertex basepoint) {
    const auto& gamma = CyclotomicContext::of(3);
    unique_cycle(graph);
    const Matching matching = require_unique_matching(graph);

    GammaSimilarity result;
    result.pegs = peg_info(graph, matching);
    if (result.pegs.pegs.size() == 2) {
        result.reason = NotSimilarReason::TwoPegs;
        return result;
    }
    if (!result.pegs.even_parity()) {
        result.reason = NotSimilarReason::OddParity;
        return result;
    }

    DiagonalSigns d = sign_assignment(underlying(graph), matching, basepoint);
    ExactMatrix conjugated = conjugate_by_signs(inverse_bipartite_upm(graph, gamma).matrix, d.signs);
    auto certificate = graph_from_hermitian_adjacency(conjugated);
    if (!certificate) {
        throw Error(ErrorCode::InvariantViolation, "D_u H_gamma^-1 D_u is not a gamma-hermitian adjacency matrix");
    }
    result.similar = true;
    result.signs = std::move(d);
    result.conjugated = std::move(conjugated);
    result.certificate = std::move(certificate);
    return result;
}

}  // namespace hermix
