#include "ks/ksengine/scenario.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace ks {

std::optional<std::size_t> Scenario::find_ray(const std::string& id) const {
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (rays_[i].id() == id) return i;
    }
    return std::nullopt;
}

ScenarioInput Scenario::to_input() const {
    ScenarioInput in;
    in.dim = dim_;
    for (const auto& r : rays_) in.rays.push_back({r.id(), r.coords()});
    for (const auto& c : contexts_) {
        auto& ids = in.contexts.emplace_back();
        for (auto r : c) ids.push_back(rays_[r].id());
    }
    return in;
}

Scenario Scenario::without_context(std::size_t k) const {
    if (k >= contexts_.size()) throw std::out_of_range("context index out of range");
    ScenarioInput in = to_input();
    in.contexts.erase(in.contexts.begin() + static_cast<std::ptrdiff_t>(k));
    std::set<std::string> used;
    for (const auto& c : in.contexts) used.insert(c.begin(), c.end());
    std::erase_if(in.rays, [&](const ScenarioInput::RayDecl& r) { return !used.contains(r.id); });
    return build_scenario(in, true);
}

namespace {

std::string coords_key(const Vector& v) { return v.str(); }

}  // namespace

Scenario build_scenario(const ScenarioInput& input, bool merge) {
    if (input.dim < 2) throw ScenarioError("dimension must be at least 2");
    if (input.contexts.empty()) throw ScenarioError("scenario has no contexts");

    // Canonicalize declarations and resolve each id to its representative.
    std::vector<Ray> declared;
    std::unordered_map<std::string, std::size_t> decl_index;
    for (const auto& d : input.rays) {
        if (d.coords.dim() != input.dim) {
            throw ScenarioError("ray " + d.id + " has dimension " + std::to_string(d.coords.dim()) + ", expected " +
                                std::to_string(input.dim));
        }
        if (!decl_index.emplace(d.id, declared.size()).second) throw ScenarioError("duplicate ray id " + d.id);
        try {
            declared.emplace_back(d.id, d.coords);
        } catch (const ZeroRay&) {
            throw ScenarioError("ray " + d.id + " is the zero vector");
        }
    }

    std::vector<std::vector<std::size_t>> context_decls;
    std::vector<std::size_t> uses(declared.size(), 0);
    for (std::size_t k = 0; k < input.contexts.size(); ++k) {
        auto& refs = context_decls.emplace_back();
        for (const auto& id : input.contexts[k]) {
            const auto it = decl_index.find(id);
            if (it == decl_index.end()) throw ScenarioError("context refers to undeclared ray " + id, k);
            refs.push_back(it->second);
            ++uses[it->second];
        }
        std::vector<Ray> rays;
        for (auto i : refs) rays.push_back(declared[i]);
        const auto check = validate_context(rays, input.dim);
        if (!check.ok()) throw ScenarioError(check.summary(), k);
    }
    for (std::size_t i = 0; i < declared.size(); ++i) {
        if (uses[i] == 0) throw ScenarioError("ray " + declared[i].id() + " is not used by any context");
    }

    Scenario s;
    s.dim_ = input.dim;
    if (merge) {
        std::map<std::string, std::size_t> by_coords;
        std::vector<std::size_t> representative(declared.size());
        for (std::size_t i = 0; i < declared.size(); ++i) {
            const auto [it, fresh] = by_coords.emplace(coords_key(declared[i].coords()), s.rays_.size());
            if (fresh) s.rays_.push_back(declared[i]);
            representative[i] = it->second;
        }
        for (const auto& refs : context_decls) {
            auto& ctx = s.contexts_.emplace_back();
            for (auto i : refs) ctx.push_back(representative[i]);
        }
    } else {
        std::set<std::string> names;
        for (std::size_t k = 0; k < context_decls.size(); ++k) {
            auto& ctx = s.contexts_.emplace_back();
            for (auto i : context_decls[k]) {
                std::string id = declared[i].id();
                if (uses[i] > 1) id += "." + std::to_string(k + 1);
                if (!names.insert(id).second) throw ScenarioError("ray id " + id + " collides after splitting", k);
                ctx.push_back(s.rays_.size());
                s.rays_.emplace_back(std::move(id), declared[i].coords());
            }
        }
    }

    s.membership_.resize(s.rays_.size());
    for (std::size_t k = 0; k < s.contexts_.size(); ++k) {
        for (auto r : s.contexts_[k]) s.membership_[r].push_back(k);
        std::vector<Ray> rays;
        for (auto r : s.contexts_[k]) rays.push_back(s.rays_[r]);
        // Merging can make a context name the same ray twice.
        auto check = validate_context(rays, s.dim_);
        if (!check.ok()) throw ScenarioError(check.summary(), k);
        s.validated_.push_back(check.context());
    }
    return s;
}

Scenario scenario_from_coordinates(std::size_t dim, const std::vector<std::vector<Vector>>& contexts, bool merge) {
    ScenarioInput in;
    in.dim = dim;
    std::map<std::string, std::string> name_of;
    for (const auto& c : contexts) {
        auto& ids = in.contexts.emplace_back();
        for (const auto& v : c) {
            if (v.is_zero()) throw ScenarioError("zero vector in context", in.contexts.size() - 1);
            const auto key = coords_key(canonicalize_ray(v));
            auto it = name_of.find(key);
            if (it == name_of.end()) {
                it = name_of.emplace(key, "r" + std::to_string(in.rays.size() + 1)).first;
                in.rays.push_back({it->second, v});
            }
            ids.push_back(it->second);
        }
    }
    return build_scenario(in, merge);
}

}  // namespace ks
