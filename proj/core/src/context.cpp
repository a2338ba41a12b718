#include "ks/qlogic/context.hpp"

#include <stdexcept>

namespace ks {

std::vector<Projector> Context::atoms() const {
    std::vector<Projector> out;
    out.reserve(rays_.size());
    for (const auto& r : rays_) out.push_back(projector_of(r));
    return out;
}

const Context& ContextValidation::context() const {
    if (!context_) throw std::logic_error("context failed validation: " + summary());
    return *context_;
}

std::string ContextValidation::summary() const {
    std::string out;
    for (const auto& v : violations_) {
        if (!out.empty()) out += "; ";
        out += v.message;
    }
    return out;
}

ContextValidation validate_context(std::span<const Ray> rays, std::size_t dim) {
    ContextValidation result;
    auto& violations = result.violations_;
    using Kind = ContextViolation::Kind;

    if (rays.size() != dim) {
        violations.push_back({Kind::WrongCardinality, ContextViolation::npos, ContextViolation::npos,
                              "context has " + std::to_string(rays.size()) + " rays, needs " +
                                  std::to_string(dim)});
    }
    bool dims_ok = true;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].dim() != dim) {
            dims_ok = false;
            violations.push_back({Kind::WrongDimension, i, ContextViolation::npos,
                                  "ray " + rays[i].id() + " has dimension " + std::to_string(rays[i].dim()) +
                                      ", expected " + std::to_string(dim)});
        }
    }
    if (dims_ok) {
        for (std::size_t i = 0; i < rays.size(); ++i) {
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                if (rays[i].same_direction(rays[j])) {
                    violations.push_back({Kind::DuplicateRay, i, j,
                                          "rays " + rays[i].id() + " and " + rays[j].id() +
                                              " are the same ray " + rays[i].coords().str()});
                } else if (!rays[i].orthogonal_to(rays[j])) {
                    violations.push_back({Kind::NotOrthogonal, i, j,
                                          "rays " + rays[i].id() + " " + rays[i].coords().str() + " and " +
                                              rays[j].id() + " " + rays[j].coords().str() +
                                              " are not orthogonal"});
                }
            }
        }
    }
    if (!violations.empty()) return result;

    Matrix sum(dim, dim);
    for (const auto& r : rays) sum += projector_of(r).matrix();
    if (sum != Matrix::identity(dim)) {
        violations.push_back({Kind::NotResolution, ContextViolation::npos, ContextViolation::npos,
                              "atomic projectors do not sum to the identity"});
        return result;
    }
    result.context_ = Context(std::vector<Ray>(rays.begin(), rays.end()));
    return result;
}

std::vector<Projector> boolean_algebra_of(const Context& c) {
    const auto atoms = c.atoms();
    const std::size_t d = atoms.size();
    const std::size_t count = std::size_t{1} << d;
    std::vector<Projector> out;
    out.reserve(count);
    out.push_back(Projector(Matrix(d, d)));
    for (std::size_t mask = 1; mask < count; ++mask) {
        // Lowest set bit splits the mask into a smaller, already built element.
        const std::size_t low = mask & (~mask + 1);
        std::size_t bit = 0;
        while ((std::size_t{1} << bit) != low) ++bit;
        out.push_back(out[mask ^ low] + atoms[bit]);
    }
    return out;
}

}  // namespace ks
