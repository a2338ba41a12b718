#include "ks/ksengine/feasibility.hpp"

#include <vector>

namespace ks {

std::optional<Vector> find_nonnegative_solution(const Matrix& a, const Vector& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.dim() != m) throw DimensionMismatch("right-hand side has the wrong length");

    // Tableau columns: n originals, m artificials, then the right-hand side.
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i].sign() < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a(i, j) : a(i, j);
        t[i][n + i] = 1;
        t[i][rhs] = flip ? -b[i] : b[i];
        basis[i] = n + i;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> cost(width);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
        cost[rhs] -= t[i][rhs];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (cost[j].sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            const Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // Phase one is bounded below by zero, so an entering column always has a leaving row.
        if (leave == m) break;

        const Rational inv = Rational(1) / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) {
                if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
            }
        }
        if (!cost[enter].is_zero()) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) {
                if (!t[leave][j].is_zero()) cost[j] -= f * t[leave][j];
            }
        }
        basis[leave] = enter;
    }

    if (!cost[rhs].is_zero()) return std::nullopt;

    Vector x(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] = t[i][rhs];
    }
    return x;
}

}  // namespace ks
