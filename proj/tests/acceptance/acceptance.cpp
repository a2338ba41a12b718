// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ks/dsl/scenario_format.hpp"
#include "ks/ksengine/model.hpp"
#include "ks/ksengine/valuation.hpp"
#include "ks/probability/classical.hpp"
#include "ks/probability/quantum.hpp"
#include "ks/qlogic/subspace.hpp"
#include "ks/symmetry/two_particle.hpp"

namespace {

using namespace ks;
using ks::testing::fixture_path;
using ks::testing::load_fixture;

/// Thrown by `require` to abort a criterion with a reason.
struct Unmet {
    std::string reason;
};

void require(bool condition, const std::string& reason) {
    if (!condition) throw Unmet{reason};
}

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

constexpr double kMaxSearchSeconds = 1.0;
constexpr std::uint64_t kDeletionCount = 26;  // brute force over 2^18 assignments per deletion
constexpr std::size_t kRandomStates = 1000;
constexpr int kLatticeCases = 1000;

std::string cabello_contradiction() {
    const auto s = load_fixture("cabello18.ks");
    const auto start = std::chrono::steady_clock::now();
    const Integer count = count_valuations(s);
    const auto found = find_valuation(s);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(s.ray_count() == 18 && s.context_count() == 9, "fixture is not 18 rays / 9 contexts");
    require(count == 0, "count_valuations = " + count.get_str());
    require(!found, "find_valuation returned a valuation");
    require(seconds < kMaxSearchSeconds, "search took " + std::to_string(seconds) + " s");
    std::ostringstream os;
    os << "count 0, no valuation, " << seconds * 1000 << " ms";
    return os.str();
}

std::string parity_certificate_check() {
    const auto s = load_fixture("cabello18.ks");
    const auto cert = parity_certificate(s);
    require(cert.has_value(), "no certificate");
    require(cert->context_count == 9, "context count " + std::to_string(cert->context_count));
    require(cert->ray_multiplicities.size() == 18, "certificate covers " +
                                                       std::to_string(cert->ray_multiplicities.size()) + " rays");
    for (const auto& [id, m] : cert->ray_multiplicities) {
        require(m == 2, "ray " + id + " has multiplicity " + std::to_string(m));
    }
    require(count_valuations(s) == 0, "certificate present but valuations exist");
    require(ks::testing::brute_force_valuation_count(s) == 0, "brute force finds valuations");
    return "18 rays x 2, 9 contexts; sound against both counters";
}

std::string split_rays() {
    const auto s = load_fixture("cabello18.ks", false);
    require(s.ray_count() == 36, "split scenario has " + std::to_string(s.ray_count()) + " rays");
    const auto v = find_valuation(s);
    require(v.has_value(), "no valuation without merging");
    require(verify_func(*v, s).passed(), "valuation fails FUNC checks");
    const Integer count = count_valuations(s);
    require(count == 262144, "count = " + count.get_str());
    return "36 rays, valuation found, count 262144 = 4^9";
}

std::string context_deletion() {
    const auto s = load_fixture("cabello18.ks");
    for (std::size_t k = 0; k < s.context_count(); ++k) {
        const auto reduced = s.without_context(k);
        const Integer count = count_valuations(reduced);
        const auto oracle = ks::testing::brute_force_valuation_count(reduced);
        const std::string label = "deleting context " + std::to_string(k + 1);
        require(count >= 1, label + " leaves no valuation");
        require(count == Integer(static_cast<unsigned long>(kDeletionCount)), label + " gives " + count.get_str());
        require(oracle == kDeletionCount, label + ": brute force gives " + std::to_string(oracle));
        require(find_valuation(reduced).has_value(), label + ": find_valuation disagrees");
    }
    return "all 9 deletions leave exactly 26 valuations";
}

std::string born_rule_suite() {
    const auto s = load_fixture("cabello18.ks");
    const auto mixed = DensityOperator::maximally_mixed(4);
    for (std::size_t k = 0; k < s.context_count(); ++k) {
        const auto d = context_distribution(mixed, s.contexts()[k]);
        for (const auto& [id, w] : d.entries()) {
            require(w == q(1, 4), "context " + std::to_string(k + 1) + " ray " + id + " has " + w.str());
        }
    }

    std::vector<std::pair<Projector, Projector>> orthogonal_pairs;
    for (const auto& [a, b] : orthogonality_graph(s).edges) {
        orthogonal_pairs.emplace_back(projector_of(s.rays()[*s.find_ray(a)]), projector_of(s.rays()[*s.find_ray(b)]));
    }
    require(orthogonal_pairs.size() == 63, "expected 63 orthogonal pairs");

    ks::testing::Gen gen(2024);
    for (std::size_t i = 0; i < kRandomStates; ++i) {
        const auto rho = gen.density(4);
        for (const auto& c : s.contexts()) {
            require(context_distribution(rho, c).total() == 1, "context distribution does not sum to 1");
        }
        for (const auto& [p, r] : orthogonal_pairs) {
            require(born(rho, p + r) == born(rho, p) + born(rho, r), "additivity fails on an orthogonal pair");
        }
    }
    return "uniform 1/4 on 9 contexts; 1000 states x (9 sums + 63 orthogonal pairs) exact";
}

std::string noncontextual_feasibility() {
    const auto cabello = load_fixture("cabello18.ks");
    ks::testing::Gen gen(7);
    std::vector<DensityOperator> states{DensityOperator::maximally_mixed(4), DensityOperator::pure(Vector{0, 0, 0, 1})};
    for (int i = 0; i < 20; ++i) states.push_back(gen.density(4));
    for (const auto& rho : states) require(!noncontextual_model(cabello, rho), "Cabello model found");

    const auto single = load_fixture("single_context.ks");
    for (std::size_t r = 0; r < single.ray_count(); ++r) {
        const auto& ray = single.rays()[r];
        const auto m = noncontextual_model(single, DensityOperator::pure(ray.coords()));
        require(m.has_value(), "pure state on " + ray.id() + " infeasible");
        require(m->valuations.size() == 1 && m->weights.front() == 1, "pure state on " + ray.id() + " not a point mass");
        require(m->valuations.front().true_rays(single) == std::vector<std::string>{ray.id()},
                "point mass on the wrong valuation");
    }
    const auto m = noncontextual_model(single, DensityOperator::maximally_mixed(4));
    require(m.has_value(), "maximally mixed state infeasible");
    for (std::size_t r = 0; r < single.ray_count(); ++r) {
        require(m->ray_probability(r) == q(1, 4), "ray " + single.rays()[r].id() + " not reproduced");
    }
    return "Cabello infeasible for 22 states; single context recovers point masses and 1/4 weights";
}

std::string lattice_laws() {
    ks::testing::Gen gen(1936);
    for (int i = 0; i < kLatticeCases; ++i) {
        const auto n = static_cast<std::size_t>(gen.integer(2, 4));
        const auto s = gen.subspace(n);
        const auto t = gen.subspace(n);
        const auto u = gen.subspace(n);
        require(ortho(ortho(s)) == s, "double orthocomplement");
        require(ortho(join(s, t)) == meet(ortho(s), ortho(t)), "De Morgan");
        const auto inner = meet(s, t);
        require(s == join(inner, meet(s, ortho(inner))), "orthomodular law");
        const auto outer = join(s, u);
        require(join(s, meet(t, outer)) == meet(join(s, t), outer), "modular law");
    }
    std::vector<Vector> x{{1, 0}}, y{{0, 1}}, d{{1, 1}};
    const auto sx = Subspace::span(x, 2), sy = Subspace::span(y, 2), sd = Subspace::span(d, 2);
    require(meet(sx, join(sy, sd)) != join(meet(sx, sy), meet(sx, sd)), "no distributivity counterexample");
    return "1000 random triples; distributivity fails for span(1,0), span(0,1), span(1,1)";
}

std::string classical_axioms() {
    const auto dice = FiniteProbabilitySpace::uniform({"1", "2", "3", "4", "5", "6"});
    require(check_classical_axioms(dice).passed(), "uniform dice fails the axioms");
    require(event_probability(dice, {"2", "4", "6"}) == q(1, 2), "even outcome");
    require(event_probability(dice, {"4", "5", "6"}) == q(1, 2), "outcome greater than 3");
    return "mu{2,4,6} = mu{4,5,6} = 1/2";
}

std::string symmetrization() {
    ks::testing::Gen gen(1925);
    int constructed = 0, excluded = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto d = static_cast<std::size_t>(gen.integer(2, 4));
        const Vector a = gen.nonzero_vector(d);
        const Vector b = gen.nonzero_vector(d);
        if (canonicalize_ray(a) != canonicalize_ray(b)) {
            const auto plus = symmetrize(a, b, Exchange::Symmetric);
            const auto minus = symmetrize(a, b, Exchange::Antisymmetric);
            require(exchange_parity(plus) == 1, "boson parity");
            require(exchange_parity(minus) == -1, "fermion parity");
            const auto p = projector_of(Ray("p", gen.nonzero_vector(d)));
            require(joint_probability(plus, p, p) == joint_probability(swap(plus), p, p), "boson swap invariance");
            require(joint_probability(minus, p, p) == joint_probability(swap(minus), p, p), "fermion swap invariance");
            ++constructed;
        }
        Rational scale = gen.rational(5, 3);
        if (scale.is_zero()) scale = 2;
        bool threw = false;
        try {
            symmetrize(a, a * scale, Exchange::Antisymmetric);
        } catch (const ZeroState&) {
            threw = true;
        }
        require(threw, "fermionic a ~ b did not raise the zero-state error");
        ++excluded;
    }
    return std::to_string(constructed) + " boson/fermion pairs, " + std::to_string(excluded) + " exclusions";
}

int cli_code(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = ks::cli::run(args, out, err);
    require(code == 0 || code == 1 || code == 2, "exit code outside {0,1,2}");
    return code;
}

std::string cli_contract() {
    std::size_t fixtures = 0;
    for (const auto& entry : std::filesystem::directory_iterator(KS_FIXTURE_DIR)) {
        if (entry.path().extension() != ".ks") continue;
        const auto text = ks::testing::read_fixture(entry.path().filename().string());
        for (bool merge : {true, false}) {
            const auto s = dsl::parse_scenario(text, merge);
            require(dsl::parse_scenario(dsl::serialize_scenario(s), merge) == s,
                    "round trip fails for " + entry.path().filename().string());
        }
        ++fixtures;
    }
    require(fixtures >= 3, "expected at least three scenario fixtures");

    const auto cabello = fixture_path("cabello18.ks");
    const auto single = fixture_path("single_context.ks");
    const auto mixed = fixture_path("mixed.state");
    const auto invalid = (std::filesystem::temp_directory_path() / "kstool_acceptance_invalid.ks").string();
    {
        std::ofstream(invalid) << "dim 4\nray r1 0 0 0 1\ncontext r1\n";
    }
    struct Expect {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Expect> expectations{
        {{"check", cabello}, 0},
        {{"check", invalid}, 2},
        {{"color", cabello}, 1},
        {{"color", cabello, "--count"}, 1},
        {{"color", cabello, "--no-merge"}, 0},
        {{"color", invalid}, 2},
        {{"parity", cabello}, 0},
        {{"parity", single}, 1},
        {{"model", cabello, "--state", mixed}, 1},
        {{"model", single, "--state", mixed}, 0},
        {{"prob", cabello, "--state", mixed, "--context", "1"}, 0},
        {{"symm", "--a", "1,0", "--b", "0,1", "--sign", "+"}, 0},
        {{"symm", "--a", "1,0", "--b", "1,0", "--sign", "-"}, 2},
        {{"color", cabello, "--unknown-flag"}, 2},
        {{"nonsense"}, 2},
    };
    for (const auto& e : expectations) {
        const int code = cli_code(e.args);
        std::string joined;
        for (const auto& a : e.args) joined += " " + a;
        require(code == e.code, "kstool" + joined + " exited " + std::to_string(code));
    }
    return std::to_string(fixtures) + " fixtures round-trip; " + std::to_string(expectations.size()) +
           " exit codes as specified";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"1 Cabello contradiction", cabello_contradiction},
        {"2 parity certificate", parity_certificate_check},
        {"3 split rays (--no-merge)", split_rays},
        {"4 context deletion", context_deletion},
        {"5 Born-rule suite", born_rule_suite},
        {"6 noncontextual-model feasibility", noncontextual_feasibility},
        {"7 lattice law suite", lattice_laws},
        {"8 classical axioms", classical_axioms},
        {"9 symmetrization", symmetrization},
        {"10 CLI contract", cli_contract},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        try {
            const auto detail = check();
            std::cout << "PASS  " << name << ": " << detail << '\n';
        } catch (const Unmet& e) {
            ++failures;
            std::cout << "FAIL  " << name << ": " << e.reason << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << name << ": exception: " << e.what() << '\n';
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
