#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ks/exactlin/matrix.hpp"
#include "ks/probability/quantum.hpp"
#include "ks/qlogic/subspace.hpp"

namespace ks::testing {

/// Seeded source of small random rational objects for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// Numerator in [-range, range], denominator in [1, max_den].
    Rational rational(int range = 5, int max_den = 4) {
        return Rational(Integer(integer(-range, range)), Integer(integer(1, max_den)));
    }

    Vector vector(std::size_t dim, int range = 3, int max_den = 3) {
        Vector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = rational(range, max_den);
        return v;
    }

    Vector nonzero_vector(std::size_t dim, int range = 3, int max_den = 3) {
        while (true) {
            auto v = vector(dim, range, max_den);
            if (!v.is_zero()) return v;
        }
    }

    /// Small integer vector; zero entries are common so orthogonality happens.
    Vector integer_vector(std::size_t dim, int range = 2) {
        Vector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = integer(-range, range);
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols, int range = 4, int max_den = 3) {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(range, max_den);
        }
        return m;
    }

    /// Span of 0..ambient random vectors. Integer entries drawn from a small
    /// range make coincident and nested subspaces likely.
    Subspace subspace(std::size_t ambient) {
        const auto k = static_cast<std::size_t>(integer(0, static_cast<int>(ambient)));
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(coin() ? integer_vector(ambient, 1) : vector(ambient, 2, 2));
        return Subspace::span(vs, ambient);
    }

    /// Convex mixture of 1..4 random pure states with random rational weights.
    DensityOperator density(std::size_t dim) {
        const int n = integer(1, 4);
        std::vector<Integer> raw;
        Integer total = 0;
        for (int i = 0; i < n; ++i) {
            raw.emplace_back(integer(1, 9));
            total += raw.back();
        }
        std::vector<std::pair<Rational, Vector>> parts;
        for (int i = 0; i < n; ++i) parts.emplace_back(Rational(raw[i], total), nonzero_vector(dim));
        return DensityOperator::mixture(parts);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ks::testing
