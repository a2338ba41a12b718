#include "ks/dsl/lexer.hpp"

#include <cctype>

#include "ks/dsl/parse_error.hpp"

namespace ks::dsl {

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size() || raw[i] == '#') break;
            const std::size_t tok_start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.tokens.push_back({std::string(raw.substr(tok_start, i - tok_start)), tok_start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

Rational parse_rational(std::size_t line, const Token& token) {
    try {
        return Rational::parse(token.text);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, token.column, "invalid rational '" + token.text + "'");
    }
}

}  // namespace ks::dsl
