#pragma once

#include <optional>

#include "ks/exactlin/matrix.hpp"

namespace ks {

/// Finds x >= 0 with A x = b by phase-one simplex over the rationals using
/// Bland's rule, so the search always terminates. Returns nullopt when the
/// system has no nonnegative solution. Throws DimensionMismatch.
std::optional<Vector> find_nonnegative_solution(const Matrix& a, const Vector& b);

}  // namespace ks
