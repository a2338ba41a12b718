#include "ks/ksengine/valuation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ks {

std::vector<std::string> Valuation::true_rays(const Scenario& s) const {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < values.size() && r < s.ray_count(); ++r) {
        if (values[r] == 1) out.push_back(s.rays()[r].id());
    }
    return out;
}

namespace {

constexpr int kOpen = -1;

/// Backtracking state over a subset of the scenario's rays and contexts.
/// Ray and context indices are global; only the listed contexts are searched.
class Search {
public:
    Search(const Scenario& s, std::vector<std::size_t> contexts)
        : scenario_(s), contexts_(std::move(contexts)), value_(s.ray_count(), kOpen) {}

    /// Calls `visit` on every complete assignment until it returns false.
    void run(const std::function<bool(const std::vector<int>&)>& visit) {
        visit_ = &visit;
        stop_ = false;
        descend();
    }

private:
    bool context_has_true(std::size_t k) const {
        for (auto r : scenario_.context_rays(k)) {
            if (value_[r] == 1) return true;
        }
        return false;
    }

    void assign(std::size_t r, int v) {
        value_[r] = v;
        trail_.push_back(r);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = kOpen;
            trail_.pop_back();
        }
    }

    /// Sets ray r to 1 and propagates. Returns false on conflict.
    bool set_true(std::size_t r) {
        std::vector<std::size_t> pending{r};
        while (!pending.empty()) {
            const std::size_t cur = pending.back();
            pending.pop_back();
            if (value_[cur] == 1) continue;
            if (value_[cur] == 0) return false;
            assign(cur, 1);
            for (auto k : scenario_.contexts_of(cur)) {
                for (auto other : scenario_.context_rays(k)) {
                    if (other == cur) continue;
                    if (value_[other] == 1) return false;
                    if (value_[other] == kOpen) assign(other, 0);
                }
            }
            // Re-examine contexts touched by the new zeros.
            for (auto k : scenario_.contexts_of(cur)) {
                for (auto zeroed : scenario_.context_rays(k)) {
                    if (zeroed == cur) continue;
                    for (auto k2 : scenario_.contexts_of(zeroed)) {
                        std::size_t open = 0, last_open = 0;
                        bool has_true = false;
                        for (auto x : scenario_.context_rays(k2)) {
                            if (value_[x] == 1) has_true = true;
                            if (value_[x] == kOpen) {
                                ++open;
                                last_open = x;
                            }
                        }
                        if (has_true) continue;
                        if (open == 0) return false;
                        if (open == 1) pending.push_back(last_open);
                    }
                }
            }
        }
        return true;
    }

    void descend() {
        std::optional<std::size_t> branch;
        for (auto k : contexts_) {
            if (!context_has_true(k)) {
                branch = k;
                break;
            }
        }
        if (!branch) {
            if (!(*visit_)(value_)) stop_ = true;
            return;
        }
        std::vector<std::size_t> open;
        for (auto r : scenario_.context_rays(*branch)) {
            if (value_[r] == kOpen) open.push_back(r);
        }
        std::sort(open.begin(), open.end());
        for (auto r : open) {
            const std::size_t mark = trail_.size();
            if (set_true(r)) descend();
            undo_to(mark);
            if (stop_) return;
        }
    }

    const Scenario& scenario_;
    std::vector<std::size_t> contexts_;
    std::vector<int> value_;
    std::vector<std::size_t> trail_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
    bool stop_ = false;
};

std::vector<std::size_t> all_contexts(const Scenario& s) {
    std::vector<std::size_t> out(s.context_count());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

/// Groups contexts into blocks connected through shared rays.
std::vector<std::vector<std::size_t>> context_blocks(const Scenario& s) {
    std::vector<std::size_t> parent(s.context_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t r = 0; r < s.ray_count(); ++r) {
        const auto ctx = s.contexts_of(r);
        for (std::size_t i = 1; i < ctx.size(); ++i) parent[find(ctx[i])] = find(ctx[0]);
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(s.context_count(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < s.context_count(); ++k) {
        const auto root = find(k);
        if (block_of[root] == static_cast<std::size_t>(-1)) {
            block_of[root] = blocks.size();
            blocks.emplace_back();
        }
        blocks[block_of[root]].push_back(k);
    }
    return blocks;
}

std::size_t rays_in(const Scenario& s, const std::vector<std::size_t>& contexts) {
    std::vector<bool> seen(s.ray_count(), false);
    std::size_t n = 0;
    for (auto k : contexts) {
        for (auto r : s.context_rays(k)) {
            if (!seen[r]) {
                seen[r] = true;
                ++n;
            }
        }
    }
    return n;
}

}  // namespace

std::optional<Valuation> find_valuation(const Scenario& s) {
    std::optional<Valuation> found;
    Search search(s, all_contexts(s));
    search.run([&](const std::vector<int>& values) {
        found = Valuation{values};
        return false;
    });
    return found;
}

Integer count_valuations(const Scenario& s) {
    Integer total = 1;
    for (const auto& block : context_blocks(s)) {
        const std::size_t n = rays_in(s, block);
        if (n > kExhaustiveRayBound) {
            throw ExhaustiveBoundExceeded("block of " + std::to_string(n) + " intertwined rays exceeds the exhaustive bound of " +
                                          std::to_string(kExhaustiveRayBound));
        }
        Integer count = 0;
        Search search(s, block);
        search.run([&](const std::vector<int>&) {
            ++count;
            return true;
        });
        total *= count;
        if (total == 0) break;
    }
    return total;
}

std::vector<Valuation> enumerate_valuations(const Scenario& s, std::size_t limit) {
    if (s.ray_count() > kExhaustiveRayBound) {
        throw ExhaustiveBoundExceeded("scenario has " + std::to_string(s.ray_count()) +
                                      " rays; enumeration is limited to " + std::to_string(kExhaustiveRayBound));
    }
    std::vector<Valuation> out;
    bool overflow = false;
    Search search(s, all_contexts(s));
    search.run([&](const std::vector<int>& values) {
        if (out.size() == limit) {
            overflow = true;
            return false;
        }
        out.push_back(Valuation{values});
        return true;
    });
    if (overflow) {
        throw ExhaustiveBoundExceeded("scenario has more than " + std::to_string(limit) + " valuations");
    }
    return out;
}

std::optional<ParityCertificate> parity_certificate(const Scenario& s) {
    if (s.context_count() % 2 == 0) return std::nullopt;
    ParityCertificate cert;
    cert.context_count = s.context_count();
    for (std::size_t r = 0; r < s.ray_count(); ++r) {
        const std::size_t m = s.contexts_of(r).size();
        if (m % 2 != 0) return std::nullopt;
        cert.ray_multiplicities.emplace_back(s.rays()[r].id(), m);
    }
    return cert;
}

FuncReport verify_func(const Valuation& v, const Scenario& s) {
    if (v.values.size() != s.ray_count()) {
        throw DimensionMismatch("valuation covers " + std::to_string(v.values.size()) + " rays, scenario has " +
                                std::to_string(s.ray_count()));
    }
    FuncReport report;
    for (std::size_t r = 0; r < s.ray_count(); ++r) {
        const long x = v.values[r];
        if (x * x != x) report.idempotence_violations.push_back(s.rays()[r].id());
    }
    for (std::size_t k = 0; k < s.context_count(); ++k) {
        const auto rays = s.context_rays(k);
        Integer sum = 0;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            sum += v.values[rays[i]];
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                if (static_cast<long>(v.values[rays[i]]) * v.values[rays[j]] != 0) {
                    report.product_violations.push_back({k, s.rays()[rays[i]].id(), s.rays()[rays[j]].id()});
                }
            }
        }
        if (sum != 1) report.additivity_violations.push_back({k, sum});
    }
    return report;
}

OrthogonalityGraph orthogonality_graph(std::span<const Ray> rays) {
    OrthogonalityGraph g;
    for (const auto& r : rays) g.vertices.push_back(r.id());
    std::sort(g.vertices.begin(), g.vertices.end());
    for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            if (!rays[i].orthogonal_to(rays[j])) continue;
            auto a = rays[i].id();
            auto b = rays[j].id();
            if (b < a) std::swap(a, b);
            g.edges.emplace_back(std::move(a), std::move(b));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

OrthogonalityGraph orthogonality_graph(const Scenario& s) { return orthogonality_graph(s.rays()); }

}  // namespace ks
