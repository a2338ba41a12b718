#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ks/dsl/lexer.hpp"
#include "ks/dsl/scenario_format.hpp"
#include "ks/dsl/state_format.hpp"

namespace ks::dsl {
namespace {

using ks::testing::read_fixture;

/// Returns the ParseError thrown by parse_scenario, or fails the test.
ParseError scenario_error(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ParseError(0, 0, "");
}

ParseError state_error(const std::string& text, std::size_t dim = 4) {
    try {
        parse_state(text, dim);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ParseError(0, 0, "");
}

TEST(Lexer, TokensCommentsAndColumns) {
    const auto lines = tokenize("# header\n\n  dim 4 # trailing\nray a 1\t-1/2\r\n");
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0].number, 3u);
    ASSERT_EQ(lines[0].tokens.size(), 2u);
    EXPECT_EQ(lines[0].tokens[0].column, 3u);
    EXPECT_EQ(lines[1].tokens[3].text, "-1/2");
    EXPECT_EQ(lines[1].tokens[3].column, 9u);
}

TEST(ParseScenario, CabelloFixture) {
    const auto s = parse_scenario(read_fixture("cabello18.ks"));
    EXPECT_EQ(s.dim(), 4u);
    EXPECT_EQ(s.ray_count(), 18u);
    EXPECT_EQ(s.context_count(), 9u);
    // P_{-1,1,1,1} is stored canonically.
    EXPECT_EQ(s.rays()[*s.find_ray("Pm1111")].coords(), (Vector{1, -1, -1, -1}));
}

TEST(ParseScenario, RationalCoordinates) {
    const auto s = parse_scenario("dim 2\nray a 1/2 1/2\nray b -3/7 3/7\ncontext a b\n");
    EXPECT_EQ(s.rays()[0].coords(), (Vector{1, 1}));
    EXPECT_EQ(s.rays()[1].coords(), (Vector{1, -1}));
}

TEST(ParseScenario, PositionedErrors) {
    struct Case {
        std::string text;
        std::size_t line;
        std::size_t column;
        std::string message;
    };
    const std::vector<Case> cases{
        {"dim 4\nray r1 0 0 0 1\ncontext r1\n", 3, 1, "context has 1 ray, needs 4"},
        {"dim 4\nray r1 0 0 0 0\n", 2, 5, "ray r1 is the zero vector"},
        {"dim 2\nbogus x\n", 2, 1, "unknown keyword 'bogus'"},
        {"dim 2\nray a 1\n", 2, 1, "ray a has 1 coordinates, needs 2"},
        {"dim 2\nray a 1 x/2\n", 2, 9, "invalid rational 'x/2'"},
        {"dim 2\nray a 1 1/0\n", 2, 9, "invalid rational '1/0'"},
        {"dim 2\nray a 1 0\nray a 0 1\n", 3, 5, "duplicate ray id a"},
        {"dim 2\nray a 1 0\ncontext a b\n", 3, 11, "undeclared ray id b"},
        {"ray a 1 0\n", 1, 1, "ray declared before dim"},
        {"dim 2\ndim 2\n", 2, 1, "duplicate dim declaration (first on line 1)"},
        {"dim 1\n", 1, 5, "dimension must be at least 2"},
        {"dim two\n", 1, 5, "invalid dimension 'two'"},
        {"# nothing\n", 1, 1, "missing dim declaration"},
        {"dim 2\nray a 1 0\n", 2, 1, "scenario has no contexts"},
        {"dim 2\nray a 1 0\nray b 0 1\nray c 1 1\ncontext a b\n", 4, 1, "ray c is not used by any context"},
        {"dim 2\nray a 1 0\nray b 1 1\ncontext a b\n", 4, 11, "rays a (1,0) and b (1,1) are not orthogonal"},
    };
    for (const auto& c : cases) {
        const auto e = scenario_error(c.text);
        EXPECT_EQ(e.line(), c.line) << c.text;
        EXPECT_EQ(e.column(), c.column) << c.text;
        EXPECT_EQ(e.message(), c.message) << c.text;
    }
    EXPECT_STREQ(scenario_error("dim 2\nbogus\n").what(), "2:1: unknown keyword 'bogus'");
}

TEST(ParseScenario, ProportionalIdsMergeAcrossContexts) {
    const std::string text = "dim 2\nray a 1 0\nray a2 2 0\nray b 0 1\ncontext a b\ncontext a2 b\n";
    const auto merged = parse_scenario(text, true);
    EXPECT_EQ(merged.ray_count(), 2u);
    EXPECT_EQ(merged.contexts_of(0).size(), 2u);
    EXPECT_EQ(parse_scenario(text, false).ray_count(), 4u);
}

TEST(Serialize, RoundTripsFixturesAndRandomScenarios) {
    for (const char* name : {"cabello18.ks", "single_context.ks", "two_disjoint.ks"}) {
        for (bool merge : {true, false}) {
            const auto s = parse_scenario(read_fixture(name), merge);
            const auto text = serialize_scenario(s);
            ASSERT_EQ(parse_scenario(text, merge), s) << name;
            ASSERT_EQ(serialize_scenario(parse_scenario(text, merge)), text);
        }
    }
    ks::testing::Gen gen(71);
    const auto all = ks::testing::cabello_contexts();
    for (int i = 0; i < 50; ++i) {
        std::vector<std::vector<Vector>> pick;
        for (const auto& c : all) {
            if (gen.coin()) {
                auto scaled = c;
                for (auto& v : scaled) v *= gen.integer(1, 3) * (gen.coin() ? 1 : -1);
                pick.push_back(scaled);
            }
        }
        if (pick.empty()) continue;
        const bool merge = gen.coin();
        const auto s = scenario_from_coordinates(4, pick, merge);
        ASSERT_EQ(parse_scenario(serialize_scenario(s), merge), s);
    }
}

TEST(WriteDot, SortedAndQuoted) {
    OrthogonalityGraph g;
    g.vertices = {"a", "b\"q"};
    g.edges = {{"a", "b\"q"}};
    std::ostringstream os;
    write_dot(os, g);
    EXPECT_EQ(os.str(),
              "graph orthogonality {\n"
              "  \"a\" [label=\"a\"];\n"
              "  \"b\\\"q\" [label=\"b\\\"q\"];\n"
              "  \"a\" -- \"b\\\"q\";\n"
              "}\n");
}

TEST(WriteDot, CabelloGoldenShape) {
    std::ostringstream os;
    write_dot(os, orthogonality_graph(parse_scenario(read_fixture("cabello18.ks"))));
    const auto text = os.str();
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = text.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    EXPECT_EQ(edges, 63u);
    EXPECT_EQ(text.find("  \"P0001\" [label=\"P0001\"];\n"), text.find('\n') + 1);
}

TEST(ParseState, AllThreeForms) {
    const auto mixed = parse_state(read_fixture("mixed.state"), 4);
    EXPECT_EQ(mixed.matrix(), DensityOperator::maximally_mixed(4).matrix());
    EXPECT_EQ(parse_state(read_fixture("maximally_mixed_matrix.state"), 4).matrix(), mixed.matrix());
    EXPECT_EQ(parse_state("pure 0 0 0 1\n", 4).matrix(), DensityOperator::pure(Vector{0, 0, 0, 1}).matrix());
    EXPECT_EQ(parse_state("# c\npure 2 0\n", 2).matrix(), (Matrix{{1, 0}, {0, 0}}));
}

TEST(ParseState, PositionedErrors) {
    EXPECT_EQ(state_error("").message(), "empty state file");
    EXPECT_EQ(state_error("pure 1 0\n").message(), "pure state has 2 coordinates, needs 4");
    EXPECT_EQ(state_error("pure 0 0 0 0\n").message(), "pure state is the zero vector");
    EXPECT_EQ(state_error("blend\n").message(), "unknown state kind 'blend' (expected pure, mixed or matrix)");
    EXPECT_EQ(state_error("mixed\n").message(), "mixed state has no components");
    EXPECT_EQ(state_error("mixed\nw 1/2 pure 1 0 0 0\n").message(), "mixture weights sum to 1/2, expected 1");
    const auto neg = state_error("mixed\nw -1/2 pure 1 0 0 0\nw 3/2 pure 0 1 0 0\n");
    EXPECT_EQ(neg.line(), 2u);
    EXPECT_EQ(neg.column(), 3u);
    EXPECT_EQ(state_error("mixed\nx 1 pure 1 0 0 0\n").line(), 2u);
    EXPECT_EQ(state_error("matrix\n1 0\n0 1\n", 2).message(), "density operator has trace 2, expected 1");
    EXPECT_EQ(state_error("matrix\n1 0\n", 2).message(), "matrix has 1 rows, needs 2");
    EXPECT_EQ(state_error("matrix\n1 0 0\n0 0\n", 2).line(), 2u);
    EXPECT_EQ(state_error("matrix\n3/2 0\n0 -1/2\n", 2).message(), "density operator is not positive semidefinite");
}

}  // namespace
}  // namespace ks::dsl
