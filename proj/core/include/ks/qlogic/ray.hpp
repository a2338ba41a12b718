#pragma once

#include <stdexcept>
#include <string>

#include "ks/exactlin/matrix.hpp"

namespace ks {

class ZeroRay : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Clears denominators, divides out the gcd and flips the sign so the first
/// nonzero entry is positive. Proportional inputs map to the same output.
/// Throws ZeroRay.
Vector canonicalize_ray(const Vector& coords);

/// A labelled one-dimensional subspace stored as a primitive integer vector.
class Ray {
public:
    /// Canonicalizes `coords`. Throws ZeroRay.
    Ray(std::string id, const Vector& coords);

    [[nodiscard]] const std::string& id() const { return id_; }
    [[nodiscard]] const Vector& coords() const { return coords_; }
    [[nodiscard]] std::size_t dim() const { return coords_.dim(); }

    [[nodiscard]] bool same_direction(const Ray& other) const { return coords_ == other.coords_; }
    [[nodiscard]] bool orthogonal_to(const Ray& other) const { return dot(coords_, other.coords_).is_zero(); }

    friend bool operator==(const Ray&, const Ray&) = default;

private:
    std::string id_;
    Vector coords_;
};

class Subspace;

/// Symmetric idempotent matrix.
class Projector {
public:
    /// Throws std::invalid_argument unless `matrix` is square, symmetric and idempotent.
    explicit Projector(Matrix matrix);

    [[nodiscard]] const Matrix& matrix() const { return matrix_; }
    [[nodiscard]] std::size_t dim() const { return matrix_.rows(); }
    [[nodiscard]] Rational rank() const { return matrix_.trace(); }

    /// Range of the projector as a subspace.
    [[nodiscard]] Subspace range() const;

    friend bool operator==(const Projector&, const Projector&) = default;

private:
    struct Unchecked {};
    Projector(Matrix matrix, Unchecked) : matrix_(std::move(matrix)) {}

    friend Projector projector_of(const Ray& r);
    friend Projector projector_onto(const Subspace& s);
    friend Projector operator+(const Projector& a, const Projector& b);

    Matrix matrix_;
};

/// v vᵀ / (v·v).
Projector projector_of(const Ray& r);

/// Sum of two projectors with orthogonal ranges. Throws std::invalid_argument
/// if the ranges are not orthogonal.
Projector operator+(const Projector& a, const Projector& b);

}  // namespace ks
