#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ks/exactlin/rational.hpp"

namespace ks::dsl {

struct Token {
    std::string text;
    std::size_t column;  // one-based
};

struct Line {
    std::size_t number;  // one-based
    std::vector<Token> tokens;
};

/// Splits text into whitespace-separated tokens per line. A token starting
/// with '#' begins a comment that runs to the end of the line. Blank and
/// comment-only lines are dropped.
std::vector<Line> tokenize(std::string_view text);

/// Throws ParseError positioned at the token.
Rational parse_rational(std::size_t line, const Token& token);

}  // namespace ks::dsl
