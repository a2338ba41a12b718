#pragma once

#include <span>

#include "ks/exactlin/matrix.hpp"
#include "ks/qlogic/ray.hpp"

namespace ks {

/// Subspace of Qⁿ held as the reduced row echelon basis of its span, so two
/// subspaces are equal exactly when their bases are equal.
class Subspace {
public:
    static Subspace zero(std::size_t ambient);
    static Subspace whole(std::size_t ambient);
    /// Span of the given vectors (which may be dependent or empty).
    static Subspace span(std::span<const Vector> vectors, std::size_t ambient);
    static Subspace of_ray(const Ray& r);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }

    [[nodiscard]] bool contains(const Vector& v) const;
    /// this ⊆ other
    [[nodiscard]] bool is_subspace_of(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_ = 0;
    Matrix basis_;
};

Subspace join(const Subspace& s, const Subspace& t);
Subspace meet(const Subspace& s, const Subspace& t);
Subspace ortho(const Subspace& s);

Projector projector_onto(const Subspace& s);

std::ostream& operator<<(std::ostream& os, const Subspace& s);

}  // namespace ks
