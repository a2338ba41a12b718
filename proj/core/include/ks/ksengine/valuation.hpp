#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ks/exactlin/rational.hpp"
#include "ks/ksengine/scenario.hpp"

namespace ks {

/// Largest connected block of rays that exhaustive counting will take on.
inline constexpr std::size_t kExhaustiveRayBound = 30;

class ExhaustiveBoundExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Truth values indexed like Scenario::rays(). Produced by the search as
/// {0,1}; arbitrary integers are representable so that verify_func can
/// report on malformed assignments.
struct Valuation {
    std::vector<int> values;

    [[nodiscard]] std::vector<std::string> true_rays(const Scenario& s) const;
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Depth-first search that, at each step, takes the first context (in input
/// order) with no ray set to 1 and tries its open rays in ascending ray
/// index. Setting a ray to 1 sets every ray sharing a context with it to 0;
/// a context left with a single open ray forces it to 1.
std::optional<Valuation> find_valuation(const Scenario& s);

/// Exact number of valuations. Independent blocks of rays (connected through
/// shared contexts) are counted separately and multiplied. Throws
/// ExhaustiveBoundExceeded when a block has more than kExhaustiveRayBound rays.
Integer count_valuations(const Scenario& s);

/// Every valuation, in search order. Requires ray_count() <= kExhaustiveRayBound
/// and at most `limit` valuations; throws ExhaustiveBoundExceeded otherwise.
std::vector<Valuation> enumerate_valuations(const Scenario& s, std::size_t limit = std::size_t{1} << 20);

/// Every ray occurs an even number of times across an odd number of
/// contexts, so no valuation can exist: summing the context equations gives
/// an even left side and an odd right side.
struct ParityCertificate {
    std::vector<std::pair<std::string, std::size_t>> ray_multiplicities;
    std::size_t context_count = 0;
};

std::optional<ParityCertificate> parity_certificate(const Scenario& s);

struct FuncReport {
    struct Product {
        std::size_t context;
        std::string first;
        std::string second;
    };
    struct Additivity {
        std::size_t context;
        Integer sum;
    };

    std::vector<Product> product_violations;
    std::vector<std::string> idempotence_violations;
    std::vector<Additivity> additivity_violations;

    [[nodiscard]] bool passed() const {
        return product_violations.empty() && idempotence_violations.empty() && additivity_violations.empty();
    }
};

/// Checks v(P)v(Q) = 0 for distinct rays sharing a context, v(P)² = v(P) for
/// every ray, and that each context sums to 1. Throws DimensionMismatch when
/// `v` does not cover every ray.
FuncReport verify_func(const Valuation& v, const Scenario& s);

struct OrthogonalityGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

/// Vertices are ray ids, sorted. An edge joins every orthogonal pair; edges
/// are stored with the smaller id first and sorted.
OrthogonalityGraph orthogonality_graph(std::span<const Ray> rays);
OrthogonalityGraph orthogonality_graph(const Scenario& s);

}  // namespace ks
