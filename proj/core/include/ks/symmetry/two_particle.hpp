#pragma once

#include <optional>
#include <stdexcept>

#include "ks/exactlin/matrix.hpp"
#include "ks/qlogic/ray.hpp"

namespace ks {

class ZeroState : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Exchange { Symmetric, Antisymmetric };

/// Unnormalized state of two particles with the same single-particle space.
/// Amplitude (i, j) multiplies |i⟩⊗|j⟩. The 1/√2 normalization of the
/// (anti)symmetrized states is irrational, so every physical quantity here
/// divides by norm_squared() instead.
class TwoParticleState {
public:
    /// Throws ZeroState for an all-zero matrix, DimensionMismatch if not square.
    explicit TwoParticleState(Matrix amplitudes);

    /// |a⟩⊗|b⟩.
    static TwoParticleState product(const Vector& a, const Vector& b);

    [[nodiscard]] std::size_t dim_single() const { return amplitudes_.rows(); }
    [[nodiscard]] const Matrix& amplitudes() const { return amplitudes_; }
    [[nodiscard]] const Rational& norm_squared() const { return norm_squared_; }

    TwoParticleState operator-() const { return TwoParticleState(-amplitudes_); }
    friend bool operator==(const TwoParticleState& a, const TwoParticleState& b) {
        return a.amplitudes_ == b.amplitudes_;
    }

private:
    Matrix amplitudes_;
    Rational norm_squared_;
};

/// |a⟩⊗|b⟩ + |b⟩⊗|a⟩ or |a⟩⊗|b⟩ − |b⟩⊗|a⟩. Throws ZeroState when the
/// antisymmetric combination vanishes (a ∝ b), ZeroRay for zero inputs and
/// DimensionMismatch for unequal dimensions.
TwoParticleState symmetrize(const Vector& a, const Vector& b, Exchange exchange);

/// Exchanges the particles: amplitudes are transposed.
TwoParticleState swap(const TwoParticleState& s);

/// +1 for swap(s) = s, -1 for swap(s) = -s, nullopt otherwise.
std::optional<int> exchange_parity(const TwoParticleState& s);

/// ⟨ψ|(P ⊗ Q)|ψ⟩ / ⟨ψ|ψ⟩: probability that particle one passes P and
/// particle two passes Q.
Rational joint_probability(const TwoParticleState& s, const Projector& p, const Projector& q);

}  // namespace ks
