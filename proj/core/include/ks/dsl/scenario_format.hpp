#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ks/dsl/parse_error.hpp"
#include "ks/ksengine/scenario.hpp"
#include "ks/ksengine/valuation.hpp"

namespace ks::dsl {

/// Scenario file as written, with the source line of every declaration.
///
///     # comment
///     dim 4
///     ray a 0 0 0 1
///     ray b 1 -1/2 0 0
///     context a b c d
struct ScenarioDocument {
    ScenarioInput input;
    std::size_t dim_line = 0;
    std::vector<std::size_t> ray_lines;
    std::vector<std::size_t> context_lines;
};

/// Syntax and declaration checks: keywords, arity, rationals, zero rays,
/// duplicate or undeclared ids, unused rays, and per-context validity.
/// Throws ParseError.
ScenarioDocument parse_scenario_document(std::string_view text);

/// parse_scenario_document followed by build_scenario. Throws ParseError.
Scenario parse_scenario(std::string_view text, bool merge = true);

/// Text that parses back (with the same merge flag) to an equal scenario.
std::string serialize_scenario(const Scenario& s);

/// Undirected DOT graph, vertices and edges in sorted order.
void write_dot(std::ostream& os, const OrthogonalityGraph& g, std::string_view name = "orthogonality");

}  // namespace ks::dsl
