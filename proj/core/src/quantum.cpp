#include "ks/probability/quantum.hpp"

namespace ks {

bool is_positive_semidefinite(const Matrix& m) {
    if (!m.is_symmetric()) return false;
    Matrix a = m;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Rational pivot = a(k, k);
        if (pivot.sign() < 0) return false;
        if (pivot.is_zero()) {
            // A zero diagonal entry of a PSD matrix forces its row to vanish.
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!a(k, j).is_zero()) return false;
            }
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Rational factor = a(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return true;
}

DensityOperator::DensityOperator(Matrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) throw InvalidState("density operator must be a non-empty square matrix");
    if (!matrix_.is_symmetric()) throw InvalidState("density operator is not symmetric");
    if (matrix_.trace() != 1) throw InvalidState("density operator has trace " + matrix_.trace().str() + ", expected 1");
    if (!is_positive_semidefinite(matrix_)) throw InvalidState("density operator is not positive semidefinite");
}

DensityOperator DensityOperator::pure(const Vector& v) {
    if (v.is_zero()) throw ZeroRay("pure state from zero vector");
    Matrix m = Matrix::outer(v, v);
    m *= Rational(1) / dot(v, v);
    return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::mixture(std::span<const std::pair<Rational, Vector>> components) {
    if (components.empty()) throw InvalidState("mixture with no components");
    const std::size_t d = components.front().second.dim();
    Matrix m(d, d);
    Rational total;
    for (const auto& [w, v] : components) {
        if (w.sign() < 0) throw InvalidState("mixture weight " + w.str() + " is negative");
        if (v.dim() != d) throw DimensionMismatch("mixture components have different dimensions");
        if (v.is_zero()) throw ZeroRay("pure state from zero vector");
        total += w;
        Matrix p = Matrix::outer(v, v);
        p *= w / dot(v, v);
        m += p;
    }
    if (total != 1) throw InvalidState("mixture weights sum to " + total.str() + ", expected 1");
    return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    if (dim == 0) throw InvalidState("zero-dimensional state");
    return DensityOperator(Matrix::identity(dim) * (Rational(1) / Rational(dim)));
}

Rational born(const DensityOperator& rho, const Projector& p) {
    if (rho.dim() != p.dim()) throw DimensionMismatch("state and projector dimensions differ");
    return (rho.matrix() * p.matrix()).trace();
}

Rational born(const DensityOperator& rho, const Ray& r) {
    if (rho.dim() != r.dim()) throw DimensionMismatch("state and ray dimensions differ");
    const Vector& v = r.coords();
    return dot(v, rho.matrix() * v) / dot(v, v);
}

FiniteProbabilitySpace context_distribution(const DensityOperator& rho, const Context& c) {
    if (rho.dim() != c.dim()) throw DimensionMismatch("state and context dimensions differ");
    std::vector<FiniteProbabilitySpace::Entry> entries;
    Rational total;
    for (const auto& r : c.rays()) {
        entries.emplace_back(r.id(), born(rho, projector_of(r)));
        total += entries.back().second;
    }
    if (total != 1) throw std::logic_error("context distribution sums to " + total.str());
    return FiniteProbabilitySpace(std::move(entries));
}

Matrix context_observable(const Context& c, std::span<const Rational> eigenvalues) {
    if (eigenvalues.size() != c.dim()) throw DimensionMismatch("one eigenvalue per context ray required");
    Matrix a(c.dim(), c.dim());
    const auto atoms = c.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) a += atoms[i].matrix() * eigenvalues[i];
    return a;
}

Rational mean_value(const DensityOperator& rho, const Context& c, std::span<const Rational> eigenvalues) {
    if (eigenvalues.size() != c.dim()) throw DimensionMismatch("one eigenvalue per context ray required");
    Rational m;
    const auto rays = c.rays();
    for (std::size_t i = 0; i < rays.size(); ++i) m += eigenvalues[i] * born(rho, projector_of(rays[i]));
    return m;
}

Matrix pvm_element(const Context& c, std::size_t outcome_mask) {
    Matrix m(c.dim(), c.dim());
    const auto atoms = c.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (outcome_mask & (std::size_t{1} << i)) m += atoms[i].matrix();
    }
    return m;
}

namespace {

std::string context_label(std::size_t k) { return "context " + std::to_string(k + 1); }

}  // namespace

Report check_state_axioms(const DensityOperator& rho, std::span<const Context> contexts) {
    Report report;
    for (std::size_t k = 0; k < contexts.size(); ++k) {
        const auto algebra = boolean_algebra_of(contexts[k]);
        std::vector<Rational> mu;
        mu.reserve(algebra.size());
        for (const auto& p : algebra) mu.push_back(born(rho, p));

        if (!mu.front().is_zero()) report.fail(context_label(k) + ": mu(0) = " + mu.front().str());
        if (mu.back() != 1) report.fail(context_label(k) + ": mu(1) = " + mu.back().str());
        for (std::size_t b = 0; b < algebra.size(); ++b) {
            for (std::size_t c = 0; c < algebra.size(); ++c) {
                if (b & c) continue;
                if (mu[b | c] != mu[b] + mu[c]) {
                    report.fail(context_label(k) + ": additivity fails for outcome masks " + std::to_string(b) +
                                " and " + std::to_string(c));
                }
            }
        }
    }
    return report;
}

Report finite_pvm_check(std::span<const Context> contexts) {
    Report report;
    for (std::size_t k = 0; k < contexts.size(); ++k) {
        const auto& c = contexts[k];
        const std::size_t d = c.dim();
        const std::size_t all = (std::size_t{1} << d) - 1;
        const Matrix id = Matrix::identity(d);
        std::vector<Matrix> element;
        element.reserve(all + 1);
        for (std::size_t b = 0; b <= all; ++b) element.push_back(pvm_element(c, b));

        if (!element[0].is_zero()) report.fail(context_label(k) + ": M(empty) != 0");
        if (element[all] != id) report.fail(context_label(k) + ": M(all outcomes) != 1");
        for (std::size_t b = 0; b <= all; ++b) {
            if (element[all & ~b] != id - element[b]) {
                report.fail(context_label(k) + ": complement rule fails for outcome mask " + std::to_string(b));
            }
            for (std::size_t e = 0; e <= all; ++e) {
                if (b & e) continue;
                if (element[b | e] != element[b] + element[e]) {
                    report.fail(context_label(k) + ": additivity fails for outcome masks " + std::to_string(b) +
                                " and " + std::to_string(e));
                }
            }
        }
    }
    return report;
}

}  // namespace ks
