#pragma once

#include <optional>
#include <vector>

#include "ks/exactlin/rational.hpp"
#include "ks/ksengine/scenario.hpp"
#include "ks/ksengine/valuation.hpp"
#include "ks/probability/quantum.hpp"

namespace ks {

/// Probability distribution over deterministic valuations. Only valuations
/// with nonzero weight are kept.
struct NoncontextualModel {
    std::vector<Valuation> valuations;
    std::vector<Rational> weights;

    /// Σ_λ p(λ) v_λ(r) for ray index r.
    [[nodiscard]] Rational ray_probability(std::size_t r) const;
};

/// Looks for weights over all valuations of `s` reproducing the Born
/// probability of every ray under `rho`. Returns nullopt when none exist.
/// Throws DimensionMismatch, and ExhaustiveBoundExceeded when the valuations
/// cannot be enumerated.
std::optional<NoncontextualModel> noncontextual_model(const Scenario& s, const DensityOperator& rho);

}  // namespace ks
