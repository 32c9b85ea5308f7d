#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zengarden/board.hpp"
#include "zengarden/engine.hpp"

namespace zengarden::astar {

struct Successor {
    MoveDescriptor move;
    GameState state;
};

/// Every distinct complete legal move from a state whose monk is on the
/// perimeter: all faces, all push counts at ornament stops, every
/// continuation at lateral stops. Branches that deadlock, exhaust the clause
/// pairs, or step back are dropped. Order is by face, then decisions in
/// ascending order. Throws std::logic_error for deadlocked or solved states.
std::vector<Successor> enumerate_moves(const GameState& state);

struct SearchLimits {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 3600.0;
    /// Skip children whose garden was already reached at an equal or smaller
    /// depth. Off by default: it loses alternative optimal sequences and
    /// changes nodes_evaluated.
    bool merge_duplicates = false;
    /// Stop expanding nodes that cannot beat the first solution's length.
    bool prune = true;
};

using Solution = std::vector<MoveDescriptor>;

struct Report {
    std::optional<int> optimal_length;
    std::vector<Solution> solutions;  // unique, all of optimal_length, in discovery order
    std::uint64_t nodes_evaluated = 0;
    std::uint64_t nodes_expanded = 0;
    bool exhausted = false;  // queue emptied, so the answer is proven
    double seconds = 0.0;
};

/// Optional instrumentation; each callback may be empty.
struct Hooks {
    /// A node taken off the open queue: depth g, heuristic h, priority f = g + h.
    std::function<void(int g, double h, double f, const GameState&)> on_pop;
    /// A child created and scored.
    std::function<void(int g, double h, const GameState&)> on_child;
};

/// Best-first search ordered by f = g + h, where g counts completed moves and
/// h is the area fitness. Ties pop in insertion order.
Report solve(const Board& board, const SearchLimits& limits = {}, const Hooks& hooks = {});

}  // namespace zengarden::astar
