#include "hermix/spectral.hpp"

#include "hermix/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

namespace hermix {

ExactMatrix::ExactMatrix(const CyclotomicContext& ctx, std::size_t dim)
    : ctx_(&ctx), dim_(dim), data_(dim * dim, CyclotomicNumber(ctx)) {}

ExactMatrix ExactMatrix::identity(const CyclotomicContext& ctx, std::size_t dim) {
    ExactMatrix m(ctx, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = CyclotomicNumber(ctx, 1L);
    return m;
}

bool ExactMatrix::is_hermitian() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            if (!(at(i, j) == conj(at(j, i)))) return false;
        }
    }
    return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.ctx_ != b.ctx_) throw Error(ErrorCode::ContextMismatch, "matrix product across contexts");
    if (a.dim_ != b.dim_) throw Error(ErrorCode::InvalidArgument, "matrix dimensions differ");
    ExactMatrix out(*a.ctx_, a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
        for (std::size_t k = 0; k < a.dim_; ++k) {
            const auto& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < a.dim_; ++j) {
                const auto& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.ctx_ == b.ctx_ && a.dim_ == b.dim_ && a.data_ == b.data_;
}

ComplexMatrix to_complex(const ExactMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out.at(i, j) = to_complex(m.at(i, j));
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            for (std::size_t j = 0; j < a.dim; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    }
    return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.data.size(); ++k) worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
    return worst;
}

namespace {

// Exponent k with H_alpha(u, v) = alpha^k; the pair must be adjacent.
unsigned entry_exponent(EdgeKind kind, unsigned order) {
    switch (kind) {
        case EdgeKind::Digon: return 0;
        case EdgeKind::Forward: return 1 % order;
        case EdgeKind::Backward: return (order - 1) % order;
        case EdgeKind::None: break;
    }
    return 0;
}

}  // namespace

ExactMatrix h_alpha_matrix(const MixedGraph& graph, const CyclotomicContext& ctx) {
    const std::size_t n = graph.vertex_count();
    ExactMatrix h(ctx, n);
    const CyclotomicNumber one(ctx, 1L);
    const CyclotomicNumber alpha = root_power(ctx, 1);
    const CyclotomicNumber alpha_bar = root_power(ctx, -1);
    for (const Edge& d : graph.digons()) {
        h.at(d.u, d.v) = one;
        h.at(d.v, d.u) = one;
    }
    for (const Edge& a : graph.arcs()) {
        h.at(a.u, a.v) = alpha;
        h.at(a.v, a.u) = alpha_bar;
    }
    return h;
}

CyclotomicNumber walk_value(const MixedGraph& graph, const CyclotomicContext& ctx, const MixedWalk& walk) {
    if (walk.vertices.empty()) throw Error(ErrorCode::NotAWalk, "empty walk");
    const unsigned order = ctx.order();
    unsigned exponent = 0;
    for (std::size_t k = 0; k + 1 < walk.vertices.size(); ++k) {
        const Vertex a = walk.vertices[k];
        const Vertex b = walk.vertices[k + 1];
        if (a >= graph.vertex_count() || b >= graph.vertex_count() || !graph.adjacent(a, b)) {
            throw Error(ErrorCode::NotAWalk, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
        }
        exponent = (exponent + entry_exponent(graph.kind(a, b), order)) % order;
    }
    return root_power(ctx, exponent);
}

std::size_t ElementarySubgraph::edge_total() const noexcept {
    std::size_t total = edges.size();
    for (const Cycle& c : cycles) total += c.length();
    return total;
}

std::vector<ElementarySubgraph> enumerate_spanning_elementary(const MixedGraph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<ElementarySubgraph> found;
    std::vector<bool> covered(n, false);
    ElementarySubgraph current;

    // Cycles through v among uncovered vertices, v being the smallest uncovered vertex.
    // Requiring second < last picks one of the two traversal directions.
    auto cycles_through = [&](Vertex v) {
        std::vector<Cycle> cycles;
        std::vector<bool> on_path(n, false);
        std::vector<Vertex> stack{v};
        on_path[v] = true;
        auto extend = [&](auto&& self, Vertex at) -> void {
            for (Vertex next : graph.neighbors(at)) {
                if (covered[next] || on_path[next]) continue;
                stack.push_back(next);
                if (stack.size() >= 3 && graph.adjacent(next, v) && stack[1] < next) {
                    cycles.push_back(Cycle{stack});
                }
                on_path[next] = true;
                self(self, next);
                on_path[next] = false;
                stack.pop_back();
            }
        };
        extend(extend, v);
        return cycles;
    };

    auto recurse = [&](auto&& self) -> void {
        Vertex v = 0;
        while (v < n && covered[v]) ++v;
        if (v == n) {
            found.push_back(current);
            return;
        }
        covered[v] = true;
        for (Vertex u : graph.neighbors(v)) {
            if (covered[u]) continue;
            covered[u] = true;
            current.edges.push_back({v, u});
            current.covered += 2;
            self(self);
            current.covered -= 2;
            current.edges.pop_back();
            covered[u] = false;
        }
        for (Cycle& cycle : cycles_through(v)) {
            for (Vertex w : cycle.vertices) covered[w] = true;
            current.covered += cycle.length();
            current.cycles.push_back(std::move(cycle));
            self(self);
            const Cycle& back = current.cycles.back();
            for (Vertex w : back.vertices) covered[w] = false;
            covered[v] = true;
            current.covered -= back.length();
            current.cycles.pop_back();
        }
        covered[v] = false;
    };
    recurse(recurse);
    return found;
}

CyclotomicNumber elementary_term(const MixedGraph& graph, const CyclotomicContext& ctx,
                                 const ElementarySubgraph& sub) {
    const std::size_t r = sub.rank();
    const std::size_t s = sub.corank();
    mpq_class scale = (r % 2 == 0) ? 1 : -1;
    for (std::size_t k = 0; k < s; ++k) scale *= 2;
    CyclotomicNumber term(ctx, scale);
    for (const Cycle& c : sub.cycles) {
        MixedWalk closed{c.vertices};
        closed.vertices.push_back(c.vertices.front());
        term *= re(walk_value(graph, ctx, closed));
    }
    return term;
}

CyclotomicNumber det_via_elementary(const MixedGraph& graph, const CyclotomicContext& ctx) {
    CyclotomicNumber det(ctx);
    for (const auto& sub : enumerate_spanning_elementary(graph)) det += elementary_term(graph, ctx, sub);
    return det;
}

std::size_t leibniz_dimension_cap() {
    constexpr std::size_t fallback = 10;
    const char* env = std::getenv("HERMIX_MAX_LEIBNIZ");
    if (env == nullptr) return fallback;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) return fallback;
    return value;
}

CyclotomicNumber det_leibniz(const ExactMatrix& m, std::size_t max_dim) {
    const std::size_t n = m.dim();
    if (n > max_dim) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "Leibniz expansion capped at dimension " + std::to_string(max_dim) + ", got " + std::to_string(n));
    }
    const auto& ctx = m.context();
    CyclotomicNumber total(ctx);
    if (n == 0) return CyclotomicNumber(ctx, 1L);

    std::vector<bool> used(n, false);
    // The sign picks up one inversion for every earlier row mapped to a larger column.
    auto expand = [&](auto&& self, std::size_t row, const CyclotomicNumber& partial, bool odd) -> void {
        if (row == n) {
            total += odd ? -partial : partial;
            return;
        }
        std::size_t larger_used = 0;
        for (std::size_t c = n; c-- > 0;) {
            if (used[c]) {
                ++larger_used;
                continue;
            }
            const auto& entry = m.at(row, c);
            if (entry.is_zero()) continue;
            used[c] = true;
            self(self, row + 1, partial * entry, odd != (larger_used % 2 == 1));
            used[c] = false;
        }
    };
    expand(expand, 0, CyclotomicNumber(ctx, 1L), false);
    return total;
}

ComplexMatrix numeric_inverse(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    const ComplexMatrix original = to_complex(m);
    ComplexMatrix a = original;
    ComplexMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a.at(r, col)) > std::abs(a.at(pivot, col))) pivot = r;
        }
        if (std::abs(a.at(pivot, col)) < numeric_pivot_tolerance) {
            throw Error(ErrorCode::NumericallySingular, "pivot below tolerance in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a.at(pivot, k), a.at(col, k));
                std::swap(inv.at(pivot, k), inv.at(col, k));
            }
        }
        const std::complex<double> p = a.at(col, col);
        for (std::size_t k = 0; k < n; ++k) {
            a.at(col, k) /= p;
            inv.at(col, k) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const std::complex<double> f = a.at(r, col);
            if (f == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                a.at(r, k) -= f * a.at(col, k);
                inv.at(r, k) -= f * inv.at(col, k);
            }
        }
    }

    ComplexMatrix eye(n);
    for (std::size_t i = 0; i < n; ++i) eye.at(i, i) = 1.0;
    const double residual = max_abs_difference(original * inv, eye);
    if (residual > numeric_residual_tolerance) {
        throw Error(ErrorCode::InvariantViolation, "inverse residual " + std::to_string(residual) + " above tolerance");
    }
    return inv;
}

std::complex<double> numeric_determinant(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix a = to_complex(m);
    std::complex<double> det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a.at(r, col)) > std::abs(a.at(pivot, col))) pivot = r;
        }
        if (std::abs(a.at(pivot, col)) == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a.at(pivot, k), a.at(col, k));
            det = -det;
        }
        det *= a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::complex<double> f = a.at(r, col) / a.at(col, col);
            for (std::size_t k = col; k < n; ++k) a.at(r, k) -= f * a.at(col, k);
        }
    }
    return det;
}

}  // namespace hermix
