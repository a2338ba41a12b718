#include "ks/symmetry/two_particle.hpp"

namespace ks {

TwoParticleState::TwoParticleState(Matrix amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (!amplitudes_.is_square()) throw DimensionMismatch("two-particle amplitudes must be square");
    for (std::size_t i = 0; i < amplitudes_.rows(); ++i) {
        for (std::size_t j = 0; j < amplitudes_.cols(); ++j) norm_squared_ += amplitudes_(i, j) * amplitudes_(i, j);
    }
    if (norm_squared_.is_zero()) throw ZeroState("two-particle state is zero");
}

TwoParticleState TwoParticleState::product(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("single-particle dimensions differ");
    return TwoParticleState(Matrix::outer(a, b));
}

TwoParticleState symmetrize(const Vector& a, const Vector& b, Exchange exchange) {
    if (a.dim() != b.dim()) throw DimensionMismatch("single-particle dimensions differ");
    if (a.is_zero() || b.is_zero()) throw ZeroRay("symmetrizing a zero vector");
    Matrix ab = Matrix::outer(a, b);
    const Matrix ba = Matrix::outer(b, a);
    if (exchange == Exchange::Symmetric) {
        ab += ba;
    } else {
        ab -= ba;
        if (ab.is_zero()) throw ZeroState("antisymmetrizing proportional vectors gives the zero state");
    }
    return TwoParticleState(std::move(ab));
}

TwoParticleState swap(const TwoParticleState& s) { return TwoParticleState(s.amplitudes().transpose()); }

std::optional<int> exchange_parity(const TwoParticleState& s) {
    const Matrix t = s.amplitudes().transpose();
    if (t == s.amplitudes()) return 1;
    if (t == -s.amplitudes()) return -1;
    return std::nullopt;
}

Rational joint_probability(const TwoParticleState& s, const Projector& p, const Projector& q) {
    if (p.dim() != s.dim_single() || q.dim() != s.dim_single()) {
        throw DimensionMismatch("projector and state dimensions differ");
    }
    // (P ⊗ Q)|ψ⟩ has amplitude matrix P A Qᵀ.
    const Matrix& amp = s.amplitudes();
    const Matrix image = p.matrix() * amp * q.matrix().transpose();
    Rational overlap;
    for (std::size_t i = 0; i < amp.rows(); ++i) {
        for (std::size_t j = 0; j < amp.cols(); ++j) overlap += amp(i, j) * image(i, j);
    }
    return overlap / s.norm_squared();
}

}  // namespace ks
