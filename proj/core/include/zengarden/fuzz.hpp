#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zengarden/board.hpp"
#include "zengarden/cell_set.hpp"
#include "zengarden/engine.hpp"

namespace zengarden::fuzz {

/// Observable state around one move, detached from the engine so that the
/// checker can be fed hand-made (or deliberately wrong) transitions.
struct Snapshot {
    CellSet raked;
    CellSet ornaments;
    int leaves_collected = 0;
    int moves_done = 0;
    bool deadlocked = false;
    std::optional<MonkOnSand> monk;

    static Snapshot of(const GameState& state);
};

/// Checks one transition against the rules' invariants: termination bound,
/// rake monotonicity, raking on vacate, the step-back ban, ornament
/// conservation, leaf order and the two-continuation limit. Returns a
/// description of the first violation.
std::optional<std::string> check_move(const Board& board, const Snapshot& before, const MoveOutcome& outcome,
                                      const Snapshot& after);

struct Config {
    std::uint64_t iterations = 100'000;
    int max_dim = 6;
    std::uint64_t seed = 1;
    int script_length = 12;
};

struct Failure {
    std::uint64_t seed;  // reproduces with iterations = 1 and this seed
    std::string message;
    std::string board;   // serialized board
    std::string script;  // clauses up to and including the failing one
};

struct Report {
    std::uint64_t iterations = 0;
    std::uint64_t moves_checked = 0;
    std::optional<Failure> failure;
};

/// Random board for one fuzz iteration.
Board random_board(std::uint64_t seed, int max_dim);

Report run(const Config& config);

}  // namespace zengarden::fuzz
