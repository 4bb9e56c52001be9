#pragma once

#include "hermix/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hermix {

// On-disk description of a mixed graph plus the order n of alpha = exp(2 pi i / n).
//
//   {
//     "n": 4,
//     "labels": ["a", "b", "c", "d"],     (optional)
//     "digons": [[0, 1], [2, 3]],
//     "arcs": [[1, 2]],
//     "alpha_order": 3                    (optional, default 3)
//   }
//
// Keys may appear in any order; unknown keys are rejected.
struct GraphDocument {
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<Edge> digons;
    std::vector<Edge> arcs;
    unsigned alpha_order = 3;

    bool operator==(const GraphDocument&) const = default;
};

// Throws Error{ParseError} with line/field diagnostics, or the build_graph errors.
GraphDocument parse_graph(std::string_view text);
GraphDocument load_document(const std::filesystem::path& path);

// Stable textual form; parse_graph(render_document(doc)) == doc.
std::string render_document(const GraphDocument& doc);

MixedGraph to_graph(const GraphDocument& doc);
GraphDocument document_from_graph(const MixedGraph& graph, unsigned alpha_order);

// Random bipartite graph with a unique perfect matching, built by attaching matched pairs to
// a growing tree. With `unicyclic`, one extra edge closing an even cycle is added, chosen so
// the matching stays unique. Non-matching edges become arcs of random orientation with
// probability 1/2. Deterministic per seed.
// Throws Error{InvalidArgument} for odd or too small n, Error{GenerationFailed} after
// exhausting retries.
GraphDocument generate_instance(std::uint64_t seed, std::size_t n, bool unicyclic, unsigned alpha_order = 3);

}  // namespace hermix
