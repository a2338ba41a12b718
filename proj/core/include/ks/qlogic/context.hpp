#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ks/qlogic/ray.hpp"

namespace ks {

class ContextValidation;
ContextValidation validate_context(std::span<const Ray> rays, std::size_t dim);

/// A maximal family of mutually orthogonal rays: their projectors resolve
/// the identity. Only obtainable through validate_context.
class Context {
public:
    [[nodiscard]] std::span<const Ray> rays() const { return rays_; }
    [[nodiscard]] std::size_t dim() const { return rays_.size(); }
    [[nodiscard]] std::vector<Projector> atoms() const;

private:
    friend class ContextValidation;
    friend ContextValidation validate_context(std::span<const Ray>, std::size_t);
    explicit Context(std::vector<Ray> rays) : rays_(std::move(rays)) {}

    std::vector<Ray> rays_;
};

struct ContextViolation {
    enum class Kind { WrongCardinality, WrongDimension, DuplicateRay, NotOrthogonal, NotResolution };
    Kind kind;
    /// Positions into the input list; unused slots are npos.
    std::size_t first = npos;
    std::size_t second = npos;
    std::string message;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

class ContextValidation {
public:
    [[nodiscard]] bool ok() const { return context_.has_value(); }
    /// Throws std::logic_error when validation failed.
    [[nodiscard]] const Context& context() const;
    [[nodiscard]] const std::vector<ContextViolation>& violations() const { return violations_; }
    /// All violation messages joined with "; ".
    [[nodiscard]] std::string summary() const;

private:
    friend ContextValidation validate_context(std::span<const Ray>, std::size_t);

    std::optional<Context> context_;
    std::vector<ContextViolation> violations_;
};

/// Accepts exactly `dim` pairwise orthogonal, pairwise distinct rays of
/// dimension `dim`, and confirms the atomic projectors sum to the identity.
ContextValidation validate_context(std::span<const Ray> rays, std::size_t dim);

/// All 2^d sums of atomic projectors, indexed by subset bitmask (bit i set
/// means atom i is included). Element 0 is the zero projector and the last
/// element is the identity.
std::vector<Projector> boolean_algebra_of(const Context& c);

}  // namespace ks
