#include "ks/dsl/scenario_format.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "ks/dsl/lexer.hpp"

namespace ks::dsl {

namespace {

std::size_t parse_dim(const Line& line) {
    if (line.tokens.size() != 2) {
        throw ParseError(line.number, line.tokens[0].column, "dim takes exactly one argument");
    }
    const auto& tok = line.tokens[1];
    std::size_t value = 0;
    for (char ch : tok.text) {
        if (ch < '0' || ch > '9' || value > 1000) {
            throw ParseError(line.number, tok.column, "invalid dimension '" + tok.text + "'");
        }
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (value < 2) throw ParseError(line.number, tok.column, "dimension must be at least 2");
    return value;
}

}  // namespace

ScenarioDocument parse_scenario_document(std::string_view text) {
    ScenarioDocument doc;
    auto& in = doc.input;
    std::map<std::string, std::size_t> ray_index;
    std::vector<bool> used;
    std::size_t last_line = 1;

    for (const auto& line : tokenize(text)) {
        last_line = line.number;
        const auto& keyword = line.tokens[0];
        if (keyword.text == "dim") {
            if (doc.dim_line != 0) {
                throw ParseError(line.number, keyword.column,
                                 "duplicate dim declaration (first on line " + std::to_string(doc.dim_line) + ")");
            }
            in.dim = parse_dim(line);
            doc.dim_line = line.number;
        } else if (keyword.text == "ray") {
            if (doc.dim_line == 0) throw ParseError(line.number, keyword.column, "ray declared before dim");
            if (line.tokens.size() < 2) throw ParseError(line.number, keyword.column, "ray needs an id");
            const auto& id = line.tokens[1];
            const std::size_t given = line.tokens.size() - 2;
            if (given != in.dim) {
                throw ParseError(line.number, keyword.column,
                                 "ray " + id.text + " has " + std::to_string(given) + " coordinates, needs " +
                                     std::to_string(in.dim));
            }
            if (ray_index.contains(id.text)) {
                throw ParseError(line.number, id.column, "duplicate ray id " + id.text);
            }
            Vector coords(in.dim);
            for (std::size_t i = 0; i < in.dim; ++i) coords[i] = parse_rational(line.number, line.tokens[i + 2]);
            if (coords.is_zero()) throw ParseError(line.number, id.column, "ray " + id.text + " is the zero vector");
            ray_index.emplace(id.text, in.rays.size());
            in.rays.push_back({id.text, std::move(coords)});
            doc.ray_lines.push_back(line.number);
            used.push_back(false);
        } else if (keyword.text == "context") {
            if (doc.dim_line == 0) throw ParseError(line.number, keyword.column, "context declared before dim");
            const std::size_t given = line.tokens.size() - 1;
            if (given != in.dim) {
                throw ParseError(line.number, keyword.column,
                                 "context has " + std::to_string(given) + (given == 1 ? " ray" : " rays") +
                                     ", needs " + std::to_string(in.dim));
            }
            std::vector<std::string> ids;
            std::vector<Ray> rays;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const auto& tok = line.tokens[i];
                const auto it = ray_index.find(tok.text);
                if (it == ray_index.end()) throw ParseError(line.number, tok.column, "undeclared ray id " + tok.text);
                used[it->second] = true;
                ids.push_back(tok.text);
                rays.emplace_back(tok.text, in.rays[it->second].coords);
            }
            const auto check = validate_context(rays, in.dim);
            if (!check.ok()) {
                const auto& v = check.violations().front();
                const std::size_t col =
                    v.second != ContextViolation::npos ? line.tokens[v.second + 1].column : keyword.column;
                throw ParseError(line.number, col, check.summary());
            }
            in.contexts.push_back(std::move(ids));
            doc.context_lines.push_back(line.number);
        } else {
            throw ParseError(line.number, keyword.column, "unknown keyword '" + keyword.text + "'");
        }
    }

    if (doc.dim_line == 0) throw ParseError(1, 1, "missing dim declaration");
    if (in.contexts.empty()) throw ParseError(last_line, 1, "scenario has no contexts");
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) throw ParseError(doc.ray_lines[i], 1, "ray " + in.rays[i].id + " is not used by any context");
    }
    return doc;
}

Scenario parse_scenario(std::string_view text, bool merge) {
    const auto doc = parse_scenario_document(text);
    try {
        return build_scenario(doc.input, merge);
    } catch (const ScenarioError& e) {
        const std::size_t line = e.context_index() ? doc.context_lines[*e.context_index()] : doc.dim_line;
        throw ParseError(line, 1, e.what());
    }
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream os;
    os << "dim " << s.dim() << '\n';
    for (const auto& r : s.rays()) {
        os << "ray " << r.id();
        for (const auto& c : r.coords()) os << ' ' << c;
        os << '\n';
    }
    for (std::size_t k = 0; k < s.context_count(); ++k) {
        os << "context";
        for (auto r : s.context_rays(k)) os << ' ' << s.rays()[r].id();
        os << '\n';
    }
    return os.str();
}

namespace {

std::string quoted(const std::string& id) {
    std::string out = "\"";
    for (char ch : id) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

void write_dot(std::ostream& os, const OrthogonalityGraph& g, std::string_view name) {
    os << "graph " << name << " {\n";
    for (const auto& v : g.vertices) os << "  " << quoted(v) << " [label=" << quoted(v) << "];\n";
    for (const auto& [a, b] : g.edges) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
    os << "}\n";
}

}  // namespace ks::dsl
