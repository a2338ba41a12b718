#include "ks/exactlin/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace ks {

namespace {

void require_same_dim(const Vector& u, const Vector& v, const char* what) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch(std::string(what) + ": vector dimensions " + std::to_string(u.dim()) +
                                " and " + std::to_string(v.dim()) + " differ");
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + " differ");
    }
}

}  // namespace

bool Vector::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Vector& Vector::operator+=(const Vector& rhs) {
    require_same_dim(*this, rhs, "vector add");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
    require_same_dim(*this, rhs, "vector subtract");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Vector& Vector::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Vector Vector::operator-() const {
    Vector out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

std::string Vector::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Rational dot(const Vector& u, const Vector& v) {
    require_same_dim(u, v, "dot");
    Rational sum;
    for (std::size_t i = 0; i < u.dim(); ++i) sum += u[i] * v[i];
    return sum;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os << ')';
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("matrix literal: ragged rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols) throw DimensionMismatch("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::outer(const Vector& u, const Vector& v) {
    Matrix m(u.dim(), v.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = u[r] * v[c];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : data_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) return false;
        }
    }
    return true;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "matrix add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "matrix subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& e : data_) e *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.data_) e = -e;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + " differ");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += x * b(k, c);
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.dim()) throw DimensionMismatch("matrix-vector product: dimension mismatch");
    Vector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ';';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m(r, c);
        }
    }
    return os << ']';
}

RowReduction row_reduce(const Matrix& m) {
    Matrix a = m;
    RowReduction out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < a.rows() && a(r, col).is_zero()) ++r;
        if (r == a.rows()) continue;

        if (r != pivot_row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r, c), a(pivot_row, c));
        }
        const Rational inv = Rational(1) / a(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;

        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a(i, col).is_zero()) continue;
            const Rational factor = a(i, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(i, c) -= factor * a(pivot_row, c);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = pivot_row;
    out.rref = std::move(a);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

Matrix kernel(const Matrix& m) {
    const auto red = row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : red.pivot_columns) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivot_columns[i]] = -red.rref(i, free);
        basis.push_back(std::move(v));
    }
    const auto stacked = Matrix::from_rows(basis, n);
    auto k = row_reduce(stacked);
    Matrix out(k.rank, n);
    for (std::size_t r = 0; r < k.rank; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = k.rref(r, c);
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const auto red = row_reduce(aug);
    if (red.rank < n || (n > 0 && red.pivot_columns[n - 1] != n - 1)) {
        throw std::domain_error("inverse of singular matrix");
    }
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = red.rref(r, n + c);
    }
    return out;
}

}  // namespace ks
