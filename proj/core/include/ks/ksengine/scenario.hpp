#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ks/exactlin/matrix.hpp"
#include "ks/qlogic/context.hpp"
#include "ks/qlogic/ray.hpp"

namespace ks {

class ScenarioError : public std::invalid_argument {
public:
    /// `context_index` is the zero-based input context the error refers to, if any.
    ScenarioError(const std::string& message, std::optional<std::size_t> context_index = std::nullopt)
        : std::invalid_argument(message), context_index_(context_index) {}

    [[nodiscard]] std::optional<std::size_t> context_index() const { return context_index_; }

private:
    std::optional<std::size_t> context_index_;
};

/// Unvalidated scenario description: labelled coordinates plus contexts
/// referring to the labels.
struct ScenarioInput {
    struct RayDecl {
        std::string id;
        Vector coords;
    };

    std::size_t dim = 0;
    std::vector<RayDecl> rays;
    std::vector<std::vector<std::string>> contexts;
};

/// Rays and the contexts that intertwine them. Immutable once built.
class Scenario {
public:
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::span<const Ray> rays() const { return rays_; }
    [[nodiscard]] std::size_t ray_count() const { return rays_.size(); }
    [[nodiscard]] std::size_t context_count() const { return contexts_.size(); }

    /// Ray indices of context k, in input order.
    [[nodiscard]] std::span<const std::size_t> context_rays(std::size_t k) const { return contexts_[k]; }
    /// Indices of the contexts containing ray r, ascending.
    [[nodiscard]] std::span<const std::size_t> contexts_of(std::size_t r) const { return membership_[r]; }
    [[nodiscard]] std::span<const Context> contexts() const { return validated_; }

    [[nodiscard]] std::optional<std::size_t> find_ray(const std::string& id) const;

    /// Scenario with context k removed; rays no longer used by any context
    /// are dropped.
    [[nodiscard]] Scenario without_context(std::size_t k) const;

    /// The input that rebuilds this scenario with merge enabled.
    [[nodiscard]] ScenarioInput to_input() const;

    friend bool operator==(const Scenario& a, const Scenario& b) {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.contexts_ == b.contexts_;
    }

private:
    friend Scenario build_scenario(const ScenarioInput&, bool);

    std::size_t dim_ = 0;
    std::vector<Ray> rays_;
    std::vector<std::vector<std::size_t>> contexts_;
    std::vector<std::vector<std::size_t>> membership_;
    std::vector<Context> validated_;
};

/// Validates every context and assembles the scenario.
///
/// With `merge` set, rays whose canonical coordinates coincide become a
/// single ray carrying the first declared id. Without it every occurrence of
/// a ray inside a context is its own ray; a ray used by several contexts is
/// then renamed `<id>.<k>` with k the one-based context number.
///
/// Throws ScenarioError for empty input, unknown or duplicate ids, unused
/// rays, dimension errors and invalid contexts.
Scenario build_scenario(const ScenarioInput& input, bool merge = true);

/// Convenience for contexts written directly as coordinate tuples, as in a
/// printed list of resolutions of the identity. Rays are named r1, r2, ...
/// in order of first appearance.
Scenario scenario_from_coordinates(std::size_t dim, const std::vector<std::vector<Vector>>& contexts,
                                   bool merge = true);

}  // namespace ks
