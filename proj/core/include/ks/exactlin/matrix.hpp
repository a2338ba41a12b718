#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ks/exactlin/rational.hpp"

namespace ks {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense vector of rationals.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim) {}
    explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

    [[nodiscard]] std::size_t dim() const { return entries_.size(); }
    [[nodiscard]] bool is_zero() const;

    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    [[nodiscard]] auto begin() const { return entries_.begin(); }
    [[nodiscard]] auto end() const { return entries_.end(); }
    [[nodiscard]] std::span<const Rational> entries() const { return entries_; }

    friend bool operator==(const Vector&, const Vector&) = default;

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector& operator*=(const Rational& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Vector a, const Rational& s) { return a *= s; }
    friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
    Vector operator-() const;

    [[nodiscard]] std::string str() const;

private:
    std::vector<Rational> entries_;
};

/// Exact sum of coordinatewise products. Throws DimensionMismatch.
Rational dot(const Vector& u, const Vector& v);

std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Dense row-major rational matrix. Zero-row matrices are allowed so that
/// the zero subspace has a basis.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    /// Stacks vectors as rows. All rows must share a dimension; `cols` is
    /// used when `rows` is empty.
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix outer(const Vector& u, const Vector& v);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_symmetric() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] std::vector<Vector> row_vectors() const;

    [[nodiscard]] Matrix transpose() const;
    /// Throws DimensionMismatch for non-square matrices.
    [[nodiscard]] Rational trace() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix operator-() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RowReduction {
    Matrix rref;
    std::size_t rank = 0;
    /// Column of the leading one in each of the first `rank` rows.
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination to reduced row echelon form. Pivots are taken
/// in the first column holding a nonzero entry, from the smallest eligible
/// row index, so the output is deterministic.
RowReduction row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per row, in reduced row echelon form.
Matrix kernel(const Matrix& m);

/// Throws std::domain_error for singular input, DimensionMismatch for non-square.
Matrix inverse(const Matrix& m);

}  // namespace ks
