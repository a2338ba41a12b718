#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ks/exactlin/rational.hpp"
#include "ks/report.hpp"

namespace ks {

class UnknownOutcome : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Finite sample space with a weight per outcome. Construction only checks
/// that labels are unique; the measure axioms are checked separately so that
/// malformed spaces can be reported on.
class FiniteProbabilitySpace {
public:
    using Entry = std::pair<std::string, Rational>;

    /// Throws std::invalid_argument on duplicate labels.
    explicit FiniteProbabilitySpace(std::vector<Entry> entries);

    static FiniteProbabilitySpace uniform(const std::vector<std::string>& outcomes);

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    /// Throws UnknownOutcome.
    [[nodiscard]] const Rational& weight(const std::string& outcome) const;
    [[nodiscard]] Rational total() const;

private:
    std::vector<Entry> entries_;
};

/// Sum of weights over the event. Throws UnknownOutcome for labels outside Ω.
Rational event_probability(const FiniteProbabilitySpace& space, const std::set<std::string>& event);

/// μ(∅) = 0, μ(Ω) = 1, nonnegativity, and additivity over pairs of disjoint
/// events. Pairs are enumerated exhaustively up to 10 outcomes and sampled
/// with a fixed seed beyond that.
Report check_classical_axioms(const FiniteProbabilitySpace& space);

}  // namespace ks
