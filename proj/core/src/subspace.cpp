#include "ks/qlogic/subspace.hpp"

#include <ostream>

namespace ks {

namespace {

Matrix leading_rows(const Matrix& m, std::size_t n) {
    Matrix out(n, m.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    }
    return out;
}

void require_same_ambient(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) {
        throw DimensionMismatch("subspaces live in different ambient dimensions");
    }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }

Subspace Subspace::whole(std::size_t ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient) {
    if (vectors.empty()) return zero(ambient);
    const auto red = row_reduce(Matrix::from_rows(vectors, ambient));
    return Subspace(ambient, leading_rows(red.rref, red.rank));
}

Subspace Subspace::of_ray(const Ray& r) {
    const Vector v = r.coords();
    return span(std::span(&v, 1), r.dim());
}

bool Subspace::contains(const Vector& v) const {
    if (v.dim() != ambient_) throw DimensionMismatch("vector outside ambient space");
    std::vector<Vector> rows = basis_.row_vectors();
    rows.push_back(v);
    return rank(Matrix::from_rows(rows, ambient_)) == dim();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    require_same_ambient(*this, other);
    return join(*this, other) == other;
}

Subspace join(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t);
    auto rows = s.basis().row_vectors();
    for (auto& v : t.basis().row_vectors()) rows.push_back(std::move(v));
    return Subspace::span(rows, s.ambient_dim());
}

Subspace ortho(const Subspace& s) {
    if (s.dim() == 0) return Subspace::whole(s.ambient_dim());
    return Subspace::span(kernel(s.basis()).row_vectors(), s.ambient_dim());
}

Subspace meet(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t);
    return ortho(join(ortho(s), ortho(t)));
}

Projector projector_onto(const Subspace& s) {
    const std::size_t n = s.ambient_dim();
    if (s.dim() == 0) return Projector(Matrix(n, n), Projector::Unchecked{});
    const Matrix& b = s.basis();
    const Matrix bt = b.transpose();
    // P = Bᵀ (B Bᵀ)⁻¹ B for a basis B held as rows.
    return Projector(bt * inverse(b * bt) * b, Projector::Unchecked{});
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
    os << "span{";
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) os << ',';
        os << s.basis().row(r);
    }
    return os << '}';
}

}  // namespace ks
