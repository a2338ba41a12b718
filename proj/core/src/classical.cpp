#include "ks/probability/classical.hpp"

#include <random>
#include <unordered_set>

namespace ks {

FiniteProbabilitySpace::FiniteProbabilitySpace(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::unordered_set<std::string> seen;
    for (const auto& [label, w] : entries_) {
        if (!seen.insert(label).second) throw std::invalid_argument("duplicate outcome '" + label + "'");
    }
}

FiniteProbabilitySpace FiniteProbabilitySpace::uniform(const std::vector<std::string>& outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("uniform measure on an empty sample space");
    const Rational w = Rational(1) / Rational(outcomes.size());
    std::vector<Entry> entries;
    for (const auto& o : outcomes) entries.emplace_back(o, w);
    return FiniteProbabilitySpace(std::move(entries));
}

const Rational& FiniteProbabilitySpace::weight(const std::string& outcome) const {
    for (const auto& [label, w] : entries_) {
        if (label == outcome) return w;
    }
    throw UnknownOutcome("outcome '" + outcome + "' is not in the sample space");
}

Rational FiniteProbabilitySpace::total() const {
    Rational t;
    for (const auto& e : entries_) t += e.second;
    return t;
}

Rational event_probability(const FiniteProbabilitySpace& space, const std::set<std::string>& event) {
    Rational p;
    for (const auto& label : event) p += space.weight(label);
    return p;
}

namespace {

// Disjoint pair encoded per outcome: 0 = neither, 1 = in A, 2 = in B.
void check_disjoint_pair(const FiniteProbabilitySpace& space, const std::vector<int>& membership, Report& report) {
    std::set<std::string> a, b, both;
    const auto& entries = space.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (membership[i] == 1) a.insert(entries[i].first);
        if (membership[i] == 2) b.insert(entries[i].first);
        if (membership[i] != 0) both.insert(entries[i].first);
    }
    const Rational lhs = event_probability(space, both);
    const Rational rhs = event_probability(space, a) + event_probability(space, b);
    if (lhs != rhs) {
        report.fail("additivity fails: mu(A u B) = " + lhs.str() + " but mu(A) + mu(B) = " + rhs.str());
    }
}

}  // namespace

Report check_classical_axioms(const FiniteProbabilitySpace& space) {
    Report report;
    if (!event_probability(space, {}).is_zero()) report.fail("mu(empty) != 0");
    for (const auto& [label, w] : space.entries()) {
        if (w.sign() < 0) report.fail("negative weight " + w.str() + " on outcome '" + label + "'");
    }
    const Rational total = space.total();
    if (total != 1) report.fail("mu(Omega) = " + total.str() + ", expected 1");

    const std::size_t n = space.size();
    std::vector<int> membership(n, 0);
    if (n <= 10) {
        std::size_t combos = 1;
        for (std::size_t i = 0; i < n; ++i) combos *= 3;
        for (std::size_t code = 0; code < combos; ++code) {
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) membership[i] = static_cast<int>(c % 3);
            check_disjoint_pair(space, membership, report);
            if (report.violations.size() > 16) break;
        }
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, 2);
        for (int trial = 0; trial < 2000; ++trial) {
            for (auto& m : membership) m = pick(rng);
            check_disjoint_pair(space, membership, report);
            if (report.violations.size() > 16) break;
        }
    }
    return report;
}

}  // namespace ks
