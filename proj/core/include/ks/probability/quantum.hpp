#pragma once

#include <span>
#include <stdexcept>
#include <utility>

#include "ks/exactlin/matrix.hpp"
#include "ks/probability/classical.hpp"
#include "ks/qlogic/context.hpp"
#include "ks/qlogic/ray.hpp"
#include "ks/report.hpp"

namespace ks {

class InvalidState : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff the symmetric matrix `m` is positive semidefinite, decided by an
/// exact LDLᵀ elimination whose pivots must all be nonnegative.
bool is_positive_semidefinite(const Matrix& m);

/// Symmetric, trace-one, positive semidefinite rational matrix.
class DensityOperator {
public:
    /// Throws InvalidState if any invariant fails.
    explicit DensityOperator(Matrix matrix);

    /// |v⟩⟨v| / ⟨v|v⟩. Throws ZeroRay.
    static DensityOperator pure(const Vector& v);
    /// Convex mixture of pure states. Weights must be nonnegative and sum to 1.
    static DensityOperator mixture(std::span<const std::pair<Rational, Vector>> components);
    static DensityOperator maximally_mixed(std::size_t dim);

    [[nodiscard]] const Matrix& matrix() const { return matrix_; }
    [[nodiscard]] std::size_t dim() const { return matrix_.rows(); }

private:
    Matrix matrix_;
};

/// tr(ρ P). Throws DimensionMismatch.
Rational born(const DensityOperator& rho, const Projector& p);
Rational born(const DensityOperator& rho, const Ray& r);

/// Born distribution over the rays of a context, keyed by ray id.
FiniteProbabilitySpace context_distribution(const DensityOperator& rho, const Context& c);

/// Σ aᵢ Pᵢ over the context atoms.
Matrix context_observable(const Context& c, std::span<const Rational> eigenvalues);
/// Σ aᵢ tr(ρ Pᵢ).
Rational mean_value(const DensityOperator& rho, const Context& c, std::span<const Rational> eigenvalues);

/// For every context: μ(0) = 0, μ(1) = 1, and μ(P_B + P_C) = μ(P_B) + μ(P_C)
/// for every pair of disjoint atom subsets B, C.
Report check_state_axioms(const DensityOperator& rho, std::span<const Context> contexts);

/// Treats each context as a finite-outcome projection-valued measure and
/// checks M(∅) = 0, M(Ω) = 1, additivity on disjoint outcome sets and
/// M(Bᶜ) = 1 − M(B).
Report finite_pvm_check(std::span<const Context> contexts);

/// M(B) for an outcome subset given as a bitmask over the context's rays.
Matrix pvm_element(const Context& c, std::size_t outcome_mask);

}  // namespace ks
