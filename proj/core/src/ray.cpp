#include "ks/qlogic/ray.hpp"

#include "ks/qlogic/subspace.hpp"

namespace ks {

Vector canonicalize_ray(const Vector& coords) {
    if (coords.is_zero()) throw ZeroRay("zero vector does not define a ray");

    Integer lcm_den = 1;
    for (const auto& e : coords) lcm_den = lcm(lcm_den, e.denominator());

    std::vector<Integer> ints;
    ints.reserve(coords.dim());
    Integer g = 0;
    for (const auto& e : coords) {
        Integer v = e.numerator() * (lcm_den / e.denominator());
        g = gcd(g, v);
        ints.push_back(std::move(v));
    }

    int sign = 0;
    for (const auto& v : ints) {
        if (v != 0) {
            sign = sgn(v);
            break;
        }
    }
    Vector out(coords.dim());
    for (std::size_t i = 0; i < ints.size(); ++i) {
        Integer q = ints[i] / g;
        if (sign < 0) q = -q;
        out[i] = Rational(q);
    }
    return out;
}

Ray::Ray(std::string id, const Vector& coords) : id_(std::move(id)), coords_(canonicalize_ray(coords)) {}

Projector::Projector(Matrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) throw std::invalid_argument("projector matrix is not square");
    if (!matrix_.is_symmetric()) throw std::invalid_argument("projector matrix is not symmetric");
    if (matrix_ * matrix_ != matrix_) throw std::invalid_argument("projector matrix is not idempotent");
}

Subspace Projector::range() const { return Subspace::span(matrix_.row_vectors(), dim()); }

Projector projector_of(const Ray& r) {
    const auto& v = r.coords();
    Matrix m = Matrix::outer(v, v);
    m *= Rational(1) / dot(v, v);
    return Projector(std::move(m), Projector::Unchecked{});
}

Projector operator+(const Projector& a, const Projector& b) {
    if (!(a.matrix_ * b.matrix_).is_zero()) {
        throw std::invalid_argument("sum of projectors with non-orthogonal ranges");
    }
    return Projector(a.matrix_ + b.matrix_, Projector::Unchecked{});
}

}  // namespace ks
