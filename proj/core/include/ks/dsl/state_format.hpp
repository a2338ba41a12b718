#pragma once

#include <cstddef>
#include <string_view>

#include "ks/dsl/parse_error.hpp"
#include "ks/probability/quantum.hpp"

namespace ks::dsl {

/// Density operator file, one of:
///
///     pure 0 0 0 1
///
///     mixed
///     w 1/2 pure 1 0 0 0
///     w 1/2 pure 0 1 0 0
///
///     matrix
///     1/4 0 0 0
///     ...
///
/// Throws ParseError, including for states that fail the density operator
/// invariants or whose dimension differs from `dim`.
DensityOperator parse_state(std::string_view text, std::size_t dim);

}  // namespace ks::dsl
