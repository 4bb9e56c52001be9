#include "hermix/commands.hpp"

#include "hermix/error.hpp"
#include "hermix/inverse.hpp"
#include "hermix/matching.hpp"
#include "hermix/spectral.hpp"
#include "hermix/unicyclic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hermix {

namespace {

std::string exact_with_approx(const CyclotomicNumber& x) {
    return to_string(x) + " (" + render_complex(to_complex(x)) + ")";
}

std::string alpha_line(unsigned order) {
    return "a = exp(2*pi*i/" + std::to_string(order) + ")\n";
}

std::string render_path(const MixedPath& path) {
    std::string out;
    for (std::size_t k = 0; k < path.vertices.size(); ++k) {
        if (k > 0) out += '-';
        out += std::to_string(path.vertices[k]);
    }
    return out;
}

std::string render_pairs(const std::vector<Edge>& pairs) {
    std::string out = "[";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (k > 0) out += ", ";
        out += "[" + std::to_string(pairs[k].u) + ", " + std::to_string(pairs[k].v) + "]";
    }
    return out + "]";
}

std::string render_matrix(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::string> cells(n * n);
    std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cells[i * n + j] = to_string(m.at(i, j));
            width = std::max(width, cells[i * n + j].size());
        }
    }
    const std::size_t label = std::to_string(n == 0 ? 0 : n - 1).size();
    const auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };

    std::ostringstream out;
    out << std::string(label, ' ');
    for (std::size_t j = 0; j < n; ++j) out << "  " << pad(std::to_string(j), width);
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        out << pad(std::to_string(i), label);
        for (std::size_t j = 0; j < n; ++j) out << "  " << pad(cells[i * n + j], width);
        out << '\n';
    }
    return out.str();
}

std::string render_signs(const std::vector<int>& signs) {
    std::string out = "diag(";
    for (std::size_t k = 0; k < signs.size(); ++k) {
        if (k > 0) out += ", ";
        out += signs[k] > 0 ? "1" : "-1";
    }
    return out + ")";
}

std::string render_pegs(const std::vector<Peg>& pegs) {
    std::string out;
    for (const Peg& p : pegs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(p.on_cycle) + "-" + std::to_string(p.off_cycle);
    }
    return out;
}

bool contains_edge(const MixedPath& path, Vertex a, Vertex b) {
    for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
        const Vertex x = path.vertices[k];
        const Vertex y = path.vertices[k + 1];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

struct Outcome {
    CheckStatus status;
    std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::Skip, std::move(detail)}; }

Outcome verdict(bool ok, const std::string& what) { return ok ? pass() : fail(what); }

std::string pair_name(Vertex i, Vertex j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::string command_det(const GraphDocument& doc) {
    const MixedGraph graph = to_graph(doc);
    const auto& ctx = CyclotomicContext::of(doc.alpha_order);
    return alpha_line(doc.alpha_order) + "det = " + exact_with_approx(det_via_elementary(graph, ctx)) + "\n";
}

std::string command_inverse(const GraphDocument& doc, bool show_paths) {
    const MixedGraph graph = to_graph(doc);
    const auto& ctx = CyclotomicContext::of(doc.alpha_order);
    const InverseReport report = inverse_bipartite_upm(graph, ctx);

    std::ostringstream out;
    out << alpha_line(doc.alpha_order);
    out << "matching = " << render_pairs(report.matching.edges()) << '\n';
    out << "inverse =\n" << render_matrix(report.matrix);
    if (!show_paths) return out.str();

    const std::size_t n = graph.vertex_count();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            const auto& terms = report.terms_for(i, j);
            if (terms.empty()) continue;
            out << pair_name(i, j) << " = " << exact_with_approx(report.matrix.at(i, j)) << '\n';
            for (const PathTerm& t : terms) {
                out << "  " << (t.sign > 0 ? '+' : '-') << " h(" << render_path(t.path) << ") = " << render_value(t.value)
                    << '\n';
            }
        }
    }
    return out.str();
}

std::string command_classify(const GraphDocument& doc, Vertex basepoint) {
    const MixedGraph graph = to_graph(doc);
    if (basepoint >= graph.vertex_count()) {
        throw Error(ErrorCode::BadVertexId, "basepoint " + std::to_string(basepoint) + " out of range");
    }
    const GammaSimilarity result = classify_gamma_similarity(graph, basepoint);

    std::ostringstream out;
    if (!result.similar) {
        out << (*result.reason == NotSimilarReason::TwoPegs ? "NotSimilar: exactly two pegs"
                                                            : "NotSimilar: odd number of non-matching cycle edges")
            << '\n';
    } else {
        out << "Similar\n";
    }
    out << "cycle = " << render_path(MixedPath{result.pegs.cycle.vertices}) << '\n';
    out << "pegs = " << render_pegs(result.pegs.pegs) << '\n';
    out << "non-matching cycle edges = " << result.pegs.unmatched_cycle_edges << '\n';
    if (result.similar) {
        out << "basepoint = " << basepoint << '\n';
        out << "D = " << render_signs(result.signs->signs) << '\n';
        out << "certificate digons = " << render_pairs(result.certificate->digons()) << '\n';
        out << "certificate arcs = " << render_pairs(result.certificate->arcs()) << '\n';
        out << "D inverse D =\n" << render_matrix(*result.conjugated);
    }
    return out.str();
}

std::vector<CheckResult> run_checks(const GraphDocument& doc) {
    std::vector<CheckResult> results;
    const auto run = [&](const std::string& name, const std::function<Outcome()>& body) {
        Outcome o;
        try {
            o = body();
        } catch (const Error& e) {
            o = fail(e.what());
        }
        results.push_back({name, o.status, std::move(o.detail)});
    };

    const MixedGraph graph = to_graph(doc);
    const auto& ctx = CyclotomicContext::of(doc.alpha_order);
    const std::size_t n = graph.vertex_count();
    const ExactMatrix h = h_alpha_matrix(graph, ctx);

    run("document round trip", [&] { return verdict(parse_graph(render_document(doc)) == doc, "re-parsed document differs"); });
    run("H_a is hermitian", [&] { return verdict(h.is_hermitian(), "H_a differs from its conjugate transpose"); });

    const CyclotomicNumber det = det_via_elementary(graph, ctx);
    run("det: elementary subgraphs = Leibniz", [&] {
        if (n > leibniz_dimension_cap()) return skip("dimension above the Leibniz cap");
        return verdict(det_leibniz(h) == det, "expansions disagree");
    });
    run("det: elementary subgraphs ~ LU", [&] {
        const double gap = std::abs(to_complex(det) - numeric_determinant(h));
        return verdict(gap <= numeric_residual_tolerance, "difference " + std::to_string(gap));
    });

    std::optional<Matching> matching;
    std::string not_h;
    try {
        matching = unique_perfect_matching(graph);
        if (!matching) not_h = "no unique perfect matching";
    } catch (const Error& e) {
        not_h = e.what();
    }
    const auto h_only = [&](const std::string& name, const std::function<Outcome()>& body) {
        if (!matching) {
            results.push_back({name, CheckStatus::Skip, not_h});
        } else {
            run(name, body);
        }
    };

    h_only("matching: no alternating cycle", [&] {
        return verdict(!has_alternating_cycle(graph, *matching), "alternating cycle found");
    });
    h_only("det = (-1)^(n/2)", [&] {
        return verdict(det == CyclotomicNumber(ctx, (n / 2) % 2 == 0 ? 1L : -1L), "det = " + to_string(det));
    });

    std::optional<InverseReport> report;
    if (matching) report = inverse_bipartite_upm(graph, ctx);
    h_only("inverse: H_a * inverse = I", [&] {
        return verdict(h * report->matrix == ExactMatrix::identity(ctx, n), "product is not the identity");
    });
    h_only("inverse: zero diagonal", [&] {
        for (Vertex i = 0; i < n; ++i) {
            if (!report->matrix.at(i, i).is_zero()) return fail("entry " + pair_name(i, i) + " is nonzero");
        }
        return pass();
    });
    h_only("inverse ~ Gauss-Jordan", [&] {
        const double gap = max_abs_difference(to_complex(report->matrix), numeric_inverse(h));
        return verdict(gap <= numeric_residual_tolerance, "max difference " + std::to_string(gap));
    });
    h_only("inverse = general path expansion", [&] {
        if (n > check_general_formula_limit) return skip("too many vertices for path expansion");
        return verdict(inverse_general(graph, ctx) == report->matrix, "formulas disagree");
    });
    h_only("co-augmenting counts = H_-1(X_G)^-1", [&] {
        if (n > check_path_limit) return skip("too many vertices for path enumeration");
        const MixedGraph base = underlying(graph);
        const auto& minus_one = CyclotomicContext::of(2);
        const CountMatrix counts = coaug_count_matrix(base, *matching);
        const ExactMatrix low = inverse_bipartite_upm(orient_nonmatching(base, *matching), minus_one).matrix;
        const ExactMatrix high =
            inverse_bipartite_upm(orient_nonmatching(base, *matching, ArcDirection::HighToLow), minus_one).matrix;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                std::size_t direct = 0;
                if (i != j) {
                    for (const MixedPath& p : enumerate_paths(base, i, j)) direct += is_co_augmenting(p, *matching) ? 1 : 0;
                }
                const CyclotomicNumber expected(minus_one, static_cast<long>(counts.at(i, j)));
                if (counts.at(i, j) != direct || !(low.at(i, j) == expected) || !(high.at(i, j) == expected)) {
                    return fail("entry " + pair_name(i, j));
                }
            }
        }
        return pass();
    });
    h_only("D_u A D_u = H_-1(X_G)", [&] {
        const MixedGraph base = underlying(graph);
        if (!is_connected(base)) return skip("graph is disconnected");
        for (Vertex u = 0; u < n; ++u) {
            try {
                if (!check_her(base, *matching, u)) return fail("basepoint " + std::to_string(u));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::OddCycleParity) return skip("a cycle has an odd number of non-matching edges");
                throw;
            }
        }
        return pass();
    });

    std::optional<PegInfo> pegs;
    std::string not_unicyclic = not_h;
    if (matching) {
        try {
            pegs = peg_info(graph, *matching);
        } catch (const Error& e) {
            not_unicyclic = e.what();
        }
    }
    const auto unicyclic_only = [&](const std::string& name, const std::function<Outcome()>& body) {
        if (!pegs) {
            results.push_back({name, CheckStatus::Skip, not_unicyclic});
        } else {
            run(name, body);
        }
    };

    unicyclic_only("pegs: co-augmenting path structure", [&] {
        const bool two = pegs->pegs.size() == 2;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                const auto& terms = report->terms_for(i, j);
                if (!two && terms.size() > 1) return fail("pair " + pair_name(i, j) + " has several paths");
                if (two && terms.size() > 2) return fail("pair " + pair_name(i, j) + " has more than two paths");
                if (two && terms.size() == 2) {
                    for (const PathTerm& t : terms) {
                        for (const Peg& p : pegs->pegs) {
                            if (!contains_edge(t.path, p.on_cycle, p.off_cycle)) {
                                return fail("path " + render_path(t.path) + " misses a peg");
                            }
                        }
                    }
                }
            }
        }
        return pass();
    });
    unicyclic_only("pegs: two-peg closed form", [&] {
        if (pegs->pegs.size() != 2) return skip("graph does not have exactly two pegs");
        std::size_t pairs = 0;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                const auto& terms = report->terms_for(i, j);
                if (terms.size() != 2) continue;
                ++pairs;
                for (const PathTerm& t : terms) {
                    if (!(two_peg_entry(graph, ctx, t.path) == report->matrix.at(i, j))) {
                        return fail("pair " + pair_name(i, j) + " via " + render_path(t.path));
                    }
                }
            }
        }
        return pass(std::to_string(pairs) + " double-path pairs");
    });
    unicyclic_only("gamma similarity = exhaustive sign search", [&] {
        if (n > exhaustive_similarity_max_dim) return skip("too many vertices for the sign search");
        const auto& gamma = CyclotomicContext::of(3);
        const GammaSimilarity cls = classify_gamma_similarity(graph);
        const auto found = exhaustive_diag_similarity(inverse_bipartite_upm(graph, gamma).matrix);
        if (found.has_value() != cls.similar) {
            return fail(cls.similar ? "search found no sign matrix" : "search found a sign matrix");
        }
        if (cls.similar && !(h_alpha_matrix(*cls.certificate, gamma) == *cls.conjugated)) {
            return fail("certificate does not reproduce D inverse D");
        }
        return pass(cls.similar ? "similar" : "not similar");
    });

    return results;
}

std::string render_checks(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const CheckResult& r : results) {
        const char* tag = "SKIP";
        if (r.status == CheckStatus::Pass) {
            tag = "PASS";
            ++passed;
        } else if (r.status == CheckStatus::Fail) {
            tag = "FAIL";
            ++failed;
        } else {
            ++skipped;
        }
        out << tag << "  " << r.name;
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        out << '\n';
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

}  // namespace hermix
