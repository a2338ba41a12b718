#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ks/dsl/scenario_format.hpp"
#include "ks/dsl/state_format.hpp"
#include "ks/ksengine/model.hpp"
#include "ks/ksengine/valuation.hpp"
#include "ks/probability/quantum.hpp"
#include "ks/symmetry/two_particle.hpp"

namespace ks::cli {

namespace {

/// Input problem already reported on stderr.
struct InputFailure {};

std::string read_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot open " << path << '\n';
        throw InputFailure{};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Scenario load_scenario(const std::string& path, bool merge, std::ostream& err) {
    const auto text = read_file(path, err);
    try {
        return dsl::parse_scenario(text, merge);
    } catch (const dsl::ParseError& e) {
        err << path << ':' << e.what() << '\n';
        throw InputFailure{};
    }
}

DensityOperator load_state(const std::string& path, std::size_t dim, std::ostream& err) {
    const auto text = read_file(path, err);
    try {
        return dsl::parse_state(text, dim);
    } catch (const dsl::ParseError& e) {
        err << path << ':' << e.what() << '\n';
        throw InputFailure{};
    }
}

Vector parse_coords(const std::vector<std::string>& parts, const char* flag, std::ostream& err) {
    Vector v(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        try {
            v[i] = Rational::parse(parts[i]);
        } catch (const std::invalid_argument& e) {
            err << "error: " << flag << ": " << e.what() << '\n';
            throw InputFailure{};
        }
    }
    return v;
}

void print_valuation(std::ostream& out, const Scenario& s, const Valuation& v) {
    out << "VALUATION\n";
    for (std::size_t r = 0; r < s.ray_count(); ++r) out << s.rays()[r].id() << ' ' << v.values[r] << '\n';
}

int cmd_check(const std::string& file, bool no_merge, std::ostream& out, std::ostream& err) {
    const auto s = load_scenario(file, !no_merge, err);
    out << "OK dim " << s.dim() << ", " << s.ray_count() << " rays, " << s.context_count() << " contexts\n";
    return kOk;
}

int cmd_color(const std::string& file, bool count, bool no_merge, std::ostream& out, std::ostream& err) {
    const auto s = load_scenario(file, !no_merge, err);
    if (count) {
        Integer n;
        try {
            n = count_valuations(s);
        } catch (const ExhaustiveBoundExceeded& e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        }
        out << "COUNT " << n.get_str() << '\n';
        if (n == 0) {
            out << "NO VALUATION\n";
            return kNegative;
        }
        return kOk;
    }
    const auto v = find_valuation(s);
    if (!v) {
        out << "NO VALUATION\n";
        return kNegative;
    }
    print_valuation(out, s, *v);
    return kOk;
}

int cmd_parity(const std::string& file, bool no_merge, std::ostream& out, std::ostream& err) {
    const auto s = load_scenario(file, !no_merge, err);
    const auto cert = parity_certificate(s);
    if (!cert) {
        out << "NO PARITY CERTIFICATE\n";
        return kNegative;
    }
    out << "PARITY CERTIFICATE\n";
    out << "contexts " << cert->context_count << '\n';
    for (const auto& [id, m] : cert->ray_multiplicities) out << id << ' ' << m << '\n';
    return kOk;
}

int cmd_graph(const std::string& file, const std::string& dot_path, bool no_merge, std::ostream& out,
              std::ostream& err) {
    const auto s = load_scenario(file, !no_merge, err);
    const auto g = orthogonality_graph(s);
    if (dot_path == "-") {
        dsl::write_dot(out, g);
        return kOk;
    }
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) {
        err << "error: cannot write " << dot_path << '\n';
        return kInputError;
    }
    dsl::write_dot(dot, g);
    out << "wrote " << g.vertices.size() << " vertices, " << g.edges.size() << " edges to " << dot_path << '\n';
    return kOk;
}

int cmd_model(const std::string& file, const std::string& state_path, std::ostream& out, std::ostream& err) {
    const auto s = load_scenario(file, true, err);
    const auto rho = load_state(state_path, s.dim(), err);
    std::optional<NoncontextualModel> model;
    try {
        model = noncontextual_model(s, rho);
    } catch (const ExhaustiveBoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    if (!model) {
        out << "INFEASIBLE\n";
        return kNegative;
    }
    out << "MODEL " << model->valuations.size() << " valuations\n";
    for (std::size_t i = 0; i < model->valuations.size(); ++i) {
        out << model->weights[i];
        for (const auto& id : model->valuations[i].true_rays(s)) out << ' ' << id;
        out << '\n';
    }
    return kOk;
}

int cmd_prob(const std::string& file, const std::string& state_path, std::optional<std::size_t> context,
             std::ostream& out, std::ostream& err) {
    const auto s = load_scenario(file, true, err);
    const auto rho = load_state(state_path, s.dim(), err);
    const auto print = [&](std::size_t k) {
        const auto dist = context_distribution(rho, s.contexts()[k]);
        for (const auto& [id, p] : dist.entries()) out << id << ' ' << p << '\n';
    };
    if (context) {
        if (*context == 0 || *context > s.context_count()) {
            err << "error: --context must be between 1 and " << s.context_count() << '\n';
            return kInputError;
        }
        print(*context - 1);
        return kOk;
    }
    for (std::size_t k = 0; k < s.context_count(); ++k) {
        out << "context " << (k + 1) << '\n';
        print(k);
    }
    return kOk;
}

int cmd_symm(const std::vector<std::string>& a_text, const std::vector<std::string>& b_text, const std::string& sign,
             std::ostream& out, std::ostream& err) {
    Exchange exchange{};
    if (sign == "+" || sign == "boson") {
        exchange = Exchange::Symmetric;
    } else if (sign == "-" || sign == "fermion") {
        exchange = Exchange::Antisymmetric;
    } else {
        err << "error: --sign must be + or -\n";
        return kInputError;
    }
    const Vector a = parse_coords(a_text, "--a", err);
    const Vector b = parse_coords(b_text, "--b", err);
    try {
        const auto state = symmetrize(a, b, exchange);
        const auto& amp = state.amplitudes();
        out << "amplitudes\n";
        for (std::size_t i = 0; i < amp.rows(); ++i) {
            for (std::size_t j = 0; j < amp.cols(); ++j) {
                if (!amp(i, j).is_zero()) out << "  " << i << ' ' << j << ' ' << amp(i, j) << '\n';
            }
        }
        out << "norm_squared " << state.norm_squared() << '\n';
        const auto parity = exchange_parity(state);
        out << "parity " << (parity ? (*parity > 0 ? "+1" : "-1") : "none") << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Kochen-Specker style contextuality scenarios", "kstool"};
    app.require_subcommand(1);

    std::string file;
    std::string state_path;
    std::string dot_path;
    bool count = false;
    bool no_merge = false;
    std::optional<std::size_t> context;
    std::vector<std::string> a_coords, b_coords;
    std::string sign;

    auto* check = app.add_subcommand("check", "Validate every context of a scenario");
    check->add_option("file", file, "Scenario file")->required();
    check->add_flag("--no-merge", no_merge, "Keep every context occurrence of a ray distinct");

    auto* color = app.add_subcommand("color", "Find or count {0,1} valuations");
    color->add_option("file", file, "Scenario file")->required();
    color->add_flag("--count", count, "Count all valuations instead of finding one");
    color->add_flag("--no-merge", no_merge, "Keep every context occurrence of a ray distinct");

    auto* parity = app.add_subcommand("parity", "Check for a parity certificate");
    parity->add_option("file", file, "Scenario file")->required();
    parity->add_flag("--no-merge", no_merge, "Keep every context occurrence of a ray distinct");

    auto* graph = app.add_subcommand("graph", "Write the orthogonality graph in DOT format");
    graph->add_option("file", file, "Scenario file")->required();
    graph->add_option("--dot", dot_path, "Output path, or - for stdout")->required();
    graph->add_flag("--no-merge", no_merge, "Keep every context occurrence of a ray distinct");

    auto* model = app.add_subcommand("model", "Search for a noncontextual model of a state");
    model->add_option("file", file, "Scenario file")->required();
    model->add_option("--state", state_path, "State file")->required();

    auto* prob = app.add_subcommand("prob", "Print Born distributions of the contexts");
    prob->add_option("file", file, "Scenario file")->required();
    prob->add_option("--state", state_path, "State file")->required();
    prob->add_option("--context", context, "One-based context number");

    auto* symm = app.add_subcommand("symm", "Symmetrize two single-particle vectors");
    symm->add_option("--a", a_coords, "Comma-separated coordinates")->required()->delimiter(',')->allow_extra_args(false);
    symm->add_option("--b", b_coords, "Comma-separated coordinates")->required()->delimiter(',')->allow_extra_args(false);
    symm->add_option("--sign", sign, "+ (bosons) or - (fermions)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }

    try {
        if (*check) return cmd_check(file, no_merge, out, err);
        if (*color) return cmd_color(file, count, no_merge, out, err);
        if (*parity) return cmd_parity(file, no_merge, out, err);
        if (*graph) return cmd_graph(file, dot_path, no_merge, out, err);
        if (*model) return cmd_model(file, state_path, out, err);
        if (*prob) return cmd_prob(file, state_path, context, out, err);
        if (*symm) return cmd_symm(a_coords, b_coords, sign, out, err);
    } catch (const InputFailure&) {
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    err << app.help();
    return kInputError;
}

}  // namespace ks::cli
