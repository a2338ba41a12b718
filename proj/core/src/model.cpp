#include "ks/ksengine/model.hpp"

#include "ks/ksengine/feasibility.hpp"

namespace ks {

Rational NoncontextualModel::ray_probability(std::size_t r) const {
    Rational p;
    for (std::size_t i = 0; i < valuations.size(); ++i) {
        if (valuations[i].values.at(r) == 1) p += weights[i];
    }
    return p;
}

std::optional<NoncontextualModel> noncontextual_model(const Scenario& s, const DensityOperator& rho) {
    if (rho.dim() != s.dim()) throw DimensionMismatch("state and scenario dimensions differ");
    const auto valuations = enumerate_valuations(s);
    if (valuations.empty()) return std::nullopt;

    // One row per ray (Born probability) and a final normalization row.
    const std::size_t rows = s.ray_count() + 1;
    Matrix a(rows, valuations.size());
    Vector b(rows);
    for (std::size_t r = 0; r < s.ray_count(); ++r) {
        b[r] = born(rho, s.rays()[r]);
        for (std::size_t j = 0; j < valuations.size(); ++j) a(r, j) = valuations[j].values[r];
    }
    for (std::size_t j = 0; j < valuations.size(); ++j) a(rows - 1, j) = 1;
    b[rows - 1] = 1;

    const auto x = find_nonnegative_solution(a, b);
    if (!x) return std::nullopt;

    NoncontextualModel model;
    for (std::size_t j = 0; j < valuations.size(); ++j) {
        if ((*x)[j].is_zero()) continue;
        model.valuations.push_back(valuations[j]);
        model.weights.push_back((*x)[j]);
    }
    return model;
}

}  // namespace ks
