#include <sstream>

#include <gtest/gtest.h>

#include "zengarden/script.hpp"

namespace zg = zengarden;

namespace {

std::vector<zg::Clause> parse(const std::string& text, const zg::Board* board = nullptr) {
    std::istringstream in(text);
    return zg::parse_script(in, board);
}

}  // namespace

TEST(Script, ParsesClausesAndComments) {
    const auto clauses = parse("; two moves\n1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1\n\n2 3 2 0 1 0 1 0 1 0 1 0 1 0 1 0 1\n");
    ASSERT_EQ(clauses.size(), 2u);
    EXPECT_EQ(clauses[0].entry, 1);
    EXPECT_EQ(clauses[1].entry, 2);
    EXPECT_EQ(clauses[1].pairs[0], (zg::ClausePair{3, 2}));
}

TEST(Script, FormatRoundTrip) {
    zg::Clause c;
    c.entry = 7;
    for (int i = 0; i < zg::kClausePairs; ++i) c.pairs[static_cast<std::size_t>(i)] = {i, 1 + i % 2};
    const std::vector<zg::Clause> script{c, c};
    EXPECT_EQ(parse(zg::format_script(script)), script);
    EXPECT_EQ(zg::format_clause(c), "7 0 1 1 2 2 1 3 2 4 1 5 2 6 1 7 2");
}

TEST(Script, RejectsMalformedLines) {
    const auto b = zg::parse_board("zpg1\n..\n..");
    EXPECT_THROW(parse("1 0 1"), zg::ScriptError);
    EXPECT_THROW(parse("1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 9"), zg::ScriptError);
    EXPECT_THROW(parse("1 0 3 0 1 0 1 0 1 0 1 0 1 0 1 0 1"), zg::ScriptError);
    EXPECT_THROW(parse("x 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1"), zg::ScriptError);
    EXPECT_THROW(parse("9 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1", &b), zg::ScriptError);
    try {
        parse("1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1\n0 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1");
        FAIL();
    } catch (const zg::ScriptError& e) {
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(Render, SymbolsForEveryKind) {
    const auto b = zg::parse_board("zpg1\n.#\n@1");
    zg::GameState s(b);
    EXPECT_EQ(zg::render(s), ".#\n@1\n");
    zg::Clause c;
    c.entry = 1;
    zg::execute_move(s, c);  // (0,0) then blocked by the ornament: deadlock on the entry square
    EXPECT_EQ(zg::render(s), "M#\n@1\n");
}

TEST(Render, RakedSquares) {
    const auto b = zg::parse_board("zpg1\n..\n..");
    zg::GameState s(b);
    zg::Clause c;
    c.entry = 1;
    zg::execute_move(s, c);
    EXPECT_EQ(zg::render(s), "=.\n=.\n");
}
