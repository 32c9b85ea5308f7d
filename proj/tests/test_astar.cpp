#include <map>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "oracle/brute_force.hpp"
#include "zengarden/astar.hpp"
#include "zengarden/fuzz.hpp"
#include "zengarden/script.hpp"

namespace zg = zengarden;
namespace as = zengarden::astar;

namespace {

std::vector<std::string> rows_of(const zg::GameState& s) {
    std::vector<std::string> rows;
    std::istringstream in(zg::render(s));
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return rows;
}

oracle::Garden garden_of(const zg::GameState& s) {
    auto g = oracle::make_garden(rows_of(s));
    g.leaves = s.leaves_collected();
    return g;
}

zg::Board empty_board(int w, int h) {
    return zg::Board(w, h, std::vector<zg::CellKind>(static_cast<std::size_t>(w * h), zg::CellKind::Sand));
}

bool replays_to_solution(const zg::Board& b, const as::Solution& sol) {
    zg::GameState s(b);
    for (const auto& m : sol) s = zg::apply_move(s, m);
    return zg::is_solved(s) && s.moves_done() == static_cast<int>(sol.size());
}

}  // namespace

TEST(EnumerateMoves, TwoByTwoHasEightStraightMoves) {
    const auto b = empty_board(2, 2);
    const auto moves = as::enumerate_moves(zg::GameState(b));
    ASSERT_EQ(moves.size(), 8u);
    for (std::size_t i = 0; i < moves.size(); ++i) {
        EXPECT_EQ(moves[i].move.entry, static_cast<int>(i) + 1);
        EXPECT_TRUE(moves[i].move.decisions.empty());
    }
}

TEST(EnumerateMoves, RowBoardOnlyLongWays) {
    const auto b = empty_board(3, 1);
    const auto moves = as::enumerate_moves(zg::GameState(b));
    ASSERT_EQ(moves.size(), 2u);
    EXPECT_EQ(moves[0].move.entry, 4);
    EXPECT_EQ(moves[1].move.entry, 8);
}

TEST(EnumerateMoves, RejectsFinishedStates) {
    const auto b = empty_board(3, 1);
    const auto solved = as::enumerate_moves(zg::GameState(b))[0].state;
    ASSERT_TRUE(zg::is_solved(solved));
    EXPECT_THROW(as::enumerate_moves(solved), std::logic_error);
}

TEST(EnumerateMoves, DescriptorsReplayToTheirChildren) {
    const auto b = zg::parse_board("zpg1\n....\n.@..\n..1.\n#...");
    const zg::GameState s(b);
    for (const auto& succ : as::enumerate_moves(s)) {
        const auto child = zg::apply_move(s, succ.move);
        EXPECT_TRUE(child.same_garden(succ.state));
        zg::GameState t(b);
        EXPECT_EQ(zg::execute_move(t, zg::to_clause(succ.move)).result, zg::MoveResult::Completed);
        EXPECT_TRUE(t.same_garden(succ.state));
    }
}

TEST(EnumerateMoves, MatchesReferenceOnRandomGardens) {
    std::mt19937_64 rng(5);
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const zg::Board b = zg::fuzz::random_board(seed, 5);
        zg::GameState s(b);
        for (int depth = 0; depth < 4; ++depth) {
            if (s.deadlocked() || zg::is_solved(s)) break;
            const auto moves = as::enumerate_moves(s);
            const auto g = garden_of(s);
            ASSERT_EQ(static_cast<int>(moves.size()), oracle::count_moves(g)) << b.serialize();

            std::set<oracle::Garden> mine;
            for (const auto& m : moves) mine.insert(garden_of(m.state));
            const auto theirs = oracle::successors(g);
            ASSERT_EQ(mine, std::set<oracle::Garden>(theirs.begin(), theirs.end())) << b.serialize();
            ++compared;

            if (moves.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
            s = moves[pick(rng)].state;
        }
    }
    EXPECT_GT(compared, 500);
}

TEST(Solve, TwoByTwoOptimum) {
    const auto b = empty_board(2, 2);
    const auto r = as::solve(b);
    ASSERT_TRUE(r.optimal_length);
    EXPECT_EQ(*r.optimal_length, 2);
    EXPECT_EQ(oracle::shortest_solution({"..", ".."}), 2);
    EXPECT_TRUE(r.exhausted);
    for (const auto& sol : r.solutions) EXPECT_TRUE(replays_to_solution(b, sol));
}

TEST(Solve, SmallRectanglesAgreeWithReference) {
    // reference values frozen from oracle::shortest_solution
    const std::map<std::pair<int, int>, int> expected{
        {{2, 2}, 2}, {{2, 3}, 2}, {{3, 2}, 2}, {{3, 3}, 3}, {{2, 4}, 2}, {{4, 2}, 2}, {{3, 4}, 3}, {{4, 3}, 3}, {{4, 4}, 3},
    };
    for (const auto& [dims, length] : expected) {
        const auto [w, h] = dims;
        const auto r = as::solve(empty_board(w, h));
        ASSERT_TRUE(r.optimal_length) << w << "x" << h;
        EXPECT_EQ(*r.optimal_length, length) << w << "x" << h;
    }
}

TEST(Solve, ReferenceValuesStillHold) {
    const std::vector<std::pair<std::vector<std::string>, int>> cases{
        {{"..", ".."}, 2}, {{"...", "...", "..."}, 3}, {{"....", "....", "...."}, 3},
    };
    for (const auto& [rows, length] : cases) EXPECT_EQ(oracle::shortest_solution(rows), length);
}

TEST(Solve, RandomSmallBoardsAgreeWithReference) {
    int solvable = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const zg::Board b = zg::fuzz::random_board(seed * 7919, 4);
        if (b.required_count() > 12) continue;
        const auto expected = oracle::shortest_solution(rows_of(zg::GameState(b)));
        const auto r = as::solve(b);
        ASSERT_TRUE(r.exhausted || r.optimal_length);
        EXPECT_EQ(r.optimal_length, expected) << b.serialize();
        if (expected) {
            ++solvable;
            ASSERT_FALSE(r.solutions.empty());
            for (const auto& sol : r.solutions) EXPECT_TRUE(replays_to_solution(b, sol)) << b.serialize();
        } else {
            EXPECT_TRUE(r.exhausted);
            EXPECT_TRUE(r.solutions.empty());
        }
    }
    EXPECT_GT(solvable, 5);
}

TEST(Solve, WalledSquareIsUnsolvable) {
    const auto b = zg::load_board(std::filesystem::path(ZENGARDEN_BOARDS_DIR) / "illegal.zpg");
    const auto r = as::solve(b);
    EXPECT_FALSE(r.optimal_length);
    EXPECT_TRUE(r.exhausted);
    EXPECT_TRUE(r.solutions.empty());
}

TEST(Solve, PruningKeepsTheOptimalSet) {
    for (const auto& b : {empty_board(2, 2), empty_board(3, 2), zg::parse_board("zpg1\n...\n.1.\n2..")}) {
        as::SearchLimits full;
        full.prune = false;
        full.max_nodes = 2'000'000;
        const auto pruned = as::solve(b);
        const auto unpruned = as::solve(b, full);
        ASSERT_EQ(pruned.optimal_length, unpruned.optimal_length);
        const std::set<as::Solution> a(pruned.solutions.begin(), pruned.solutions.end());
        const std::set<as::Solution> c(unpruned.solutions.begin(), unpruned.solutions.end());
        EXPECT_EQ(a, c);
        EXPECT_EQ(a.size(), pruned.solutions.size());
        EXPECT_LE(pruned.nodes_evaluated, unpruned.nodes_evaluated);
    }
}

TEST(Solve, Deterministic) {
    const auto b = zg::parse_board("zpg1\n....\n.@..\n...#\n....");
    const auto a = as::solve(b);
    const auto c = as::solve(b);
    EXPECT_EQ(a.optimal_length, c.optimal_length);
    EXPECT_EQ(a.solutions, c.solutions);
    EXPECT_EQ(a.nodes_evaluated, c.nodes_evaluated);
    EXPECT_EQ(a.nodes_expanded, c.nodes_expanded);
}

TEST(Solve, MergingDuplicatesKeepsTheOptimum) {
    const auto b = zg::parse_board("zpg1\n....\n.@..\n...#\n....");
    as::SearchLimits merged;
    merged.merge_duplicates = true;
    const auto a = as::solve(b);
    const auto m = as::solve(b, merged);
    EXPECT_EQ(a.optimal_length, m.optimal_length);
    EXPECT_LE(m.nodes_evaluated, a.nodes_evaluated);
    EXPECT_FALSE(m.solutions.empty());
    for (const auto& sol : m.solutions) EXPECT_TRUE(replays_to_solution(b, sol));
}

TEST(Solve, NodeLimitStopsTheSearch) {
    as::SearchLimits tight;
    tight.max_nodes = 50;
    const auto r = as::solve(empty_board(4, 4), tight);
    EXPECT_FALSE(r.exhausted);
    EXPECT_FALSE(r.optimal_length);
}

TEST(Solve, HeuristicIsAdmissibleAndOrdered) {
    const auto b = zg::parse_board("zpg1\n....\n.1..\n..@.\n....");
    double last_f = -1.0;
    bool solved_seen = false;
    as::Hooks hooks;
    hooks.on_pop = [&](int g, double h, double f, const zg::GameState& s) {
        EXPECT_GE(h, 0.0);
        EXPECT_LE(h, 1.0);
        EXPECT_EQ(h == 0.0, s.required_remaining() == 0);
        EXPECT_DOUBLE_EQ(f, g + h);
        if (!solved_seen) EXPECT_GE(f, last_f - 1e-12);
        last_f = f;
        if (h == 0.0) solved_seen = true;
    };
    const auto r = as::solve(b, {}, hooks);
    EXPECT_TRUE(r.optimal_length);
}
