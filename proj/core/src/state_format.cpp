#include "ks/dsl/state_format.hpp"

#include "ks/dsl/lexer.hpp"

namespace ks::dsl {

namespace {

Vector read_coords(const Line& line, std::size_t first, std::size_t dim) {
    const std::size_t given = line.tokens.size() - first;
    if (given != dim) {
        throw ParseError(line.number, line.tokens[first - 1].column,
                         "pure state has " + std::to_string(given) + " coordinates, needs " + std::to_string(dim));
    }
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = parse_rational(line.number, line.tokens[first + i]);
    if (v.is_zero()) throw ParseError(line.number, line.tokens[first - 1].column, "pure state is the zero vector");
    return v;
}

}  // namespace

DensityOperator parse_state(std::string_view text, std::size_t dim) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty state file");
    const auto& head = lines.front();
    const auto& kind = head.tokens[0];

    try {
        if (kind.text == "pure") {
            if (lines.size() > 1) throw ParseError(lines[1].number, 1, "unexpected line after pure state");
            return DensityOperator::pure(read_coords(head, 1, dim));
        }
        if (kind.text == "mixed") {
            if (head.tokens.size() != 1) throw ParseError(head.number, head.tokens[1].column, "mixed takes no arguments");
            if (lines.size() == 1) throw ParseError(head.number, kind.column, "mixed state has no components");
            std::vector<std::pair<Rational, Vector>> components;
            for (std::size_t i = 1; i < lines.size(); ++i) {
                const auto& line = lines[i];
                if (line.tokens.size() < 3 || line.tokens[0].text != "w" || line.tokens[2].text != "pure") {
                    throw ParseError(line.number, line.tokens[0].column, "expected 'w <weight> pure <coords>'");
                }
                const Rational w = parse_rational(line.number, line.tokens[1]);
                if (w.sign() < 0) throw ParseError(line.number, line.tokens[1].column, "negative mixture weight");
                components.emplace_back(w, read_coords(line, 3, dim));
            }
            return DensityOperator::mixture(components);
        }
        if (kind.text == "matrix") {
            if (head.tokens.size() != 1) throw ParseError(head.number, head.tokens[1].column, "matrix takes no arguments");
            if (lines.size() != dim + 1) {
                throw ParseError(lines.back().number, 1,
                                 "matrix has " + std::to_string(lines.size() - 1) + " rows, needs " + std::to_string(dim));
            }
            Matrix m(dim, dim);
            for (std::size_t r = 0; r < dim; ++r) {
                const auto& line = lines[r + 1];
                if (line.tokens.size() != dim) {
                    throw ParseError(line.number, 1,
                                     "matrix row has " + std::to_string(line.tokens.size()) + " entries, needs " +
                                         std::to_string(dim));
                }
                for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_rational(line.number, line.tokens[c]);
            }
            return DensityOperator(std::move(m));
        }
    } catch (const InvalidState& e) {
        throw ParseError(head.number, kind.column, e.what());
    }
    throw ParseError(head.number, kind.column, "unknown state kind '" + kind.text + "' (expected pure, mixed or matrix)");
}

}  // namespace ks::dsl
