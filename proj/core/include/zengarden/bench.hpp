#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zengarden/astar.hpp"
#include "zengarden/board.hpp"
#include "zengarden/ga.hpp"

namespace zengarden::bench {

struct Config {
    int runs = 50;
    ga::Config ga;                // rng_seed is ignored; run i uses base_seed + i
    astar::SearchLimits limits;
    std::uint64_t base_seed = 1;
    unsigned threads = 0;         // 0: hardware concurrency
};

enum class BoardStatus { Solved, Unsolvable, LimitReached };

std::string_view to_string(BoardStatus s);

struct GaRun {
    std::uint64_t seed = 0;
    bool solved = false;
    int moves = 0;  // length of the best solution, when solved
    bool optimal = false;
    std::uint64_t evaluations = 0;
    std::optional<std::uint64_t> evaluations_to_optimum;
    int generations = 0;
    double best_fitness = 0.0;
};

struct BoardResult {
    std::string board;
    int width = 0;
    int height = 0;
    int required = 0;
    BoardStatus status = BoardStatus::LimitReached;
    std::optional<int> optimal;
    std::uint64_t astar_evals = 0;
    std::size_t astar_solutions = 0;
    std::vector<GaRun> runs;
};

/// One line of the comparison table.
struct Row {
    std::string board;
    BoardStatus status = BoardStatus::Solved;
    std::optional<int> optimal;
    std::optional<int> ga_best;           // shortest GA solution over all runs
    std::optional<double> ga_avg;         // mean length over solving runs
    std::optional<double> ga_excess_pct;  // (ga_avg - optimal) / optimal * 100
    std::uint64_t astar_evals = 0;
    std::optional<double> ga_avg_evals;   // mean evaluations over runs that reached the optimum
    std::optional<double> eval_ratio_pct; // ga_avg_evals / astar_evals * 100
    double ga_solve_rate = 0.0;
    int runs = 0;
    int solved_runs = 0;
    int optimal_runs = 0;
};

struct Summary {
    std::vector<Row> rows;  // solved boards by optimal length, then the rest
    std::optional<double> mean_excess_pct;
    std::optional<double> mean_eval_ratio_pct;
    std::optional<double> median_eval_ratio_pct;
};

Row summarize(const BoardResult& result);
Summary summarize(const std::vector<BoardResult>& results);

/// A* first to fix the optimum, then the seeded GA repetitions.
BoardResult run_board(const Board& board, const Config& config);

/// Board files (*.zpg) in a directory, sorted by file name. Throws when none exist.
std::vector<Board> load_suite(const std::filesystem::path& dir);

/// Columns: board, optimal, ga_best, ga_avg, ga_excess_pct, astar_evals,
/// ga_avg_evals, eval_ratio_pct, ga_solve_rate; followed by "average" and
/// "median" aggregate rows.
std::string to_csv(const Summary& summary);
nlohmann::json to_json(const std::vector<BoardResult>& results, const Summary& summary, const Config& config);
std::string format_table(const Summary& summary);

}  // namespace zengarden::bench
