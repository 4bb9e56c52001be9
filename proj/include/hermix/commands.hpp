#pragma once

#include "hermix/document.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hermix {

inline constexpr int exit_success = 0;
inline constexpr int exit_precondition = 2;
inline constexpr int exit_invariant = 3;

// Reports end with a newline. Exact values are polynomials in the symbol "a" = alpha,
// followed by a parenthesised floating-point approximation.
std::string command_det(const GraphDocument& doc);

// Requires the graph to be bipartite with a unique perfect matching.
std::string command_inverse(const GraphDocument& doc, bool show_paths);

// Requires a unicyclic graph with a unique perfect matching; always works over gamma
// (alpha_order 3), whatever the document says.
std::string command_classify(const GraphDocument& doc, Vertex basepoint = 0);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    std::string detail;
};

// Path enumeration is exponential; checks built on it are skipped above these sizes.
inline constexpr std::size_t check_path_limit = 12;
inline constexpr std::size_t check_general_formula_limit = 10;

// Every property that applies to the instance, in a fixed order.
std::vector<CheckResult> run_checks(const GraphDocument& doc);
std::string render_checks(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hermix
