#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/container/static_vector.hpp>

#include "zengarden/board.hpp"
#include "zengarden/cell_set.hpp"

namespace zengarden {

/// Number of (push, choice) pairs carried by one clause, and so the number of
/// stops a single move may make.
constexpr int kClausePairs = 8;

struct MonkOnSand {
    Cell cell;
    Direction heading;
    int squares_visited = 0;  // distinct sand squares entered during the current move

    friend bool operator==(const MonkOnSand&, const MonkOnSand&) = default;
};

/// Play state over a shared board. The board must outlive the state.
class GameState {
public:
    explicit GameState(const Board& board);

    const Board& board() const { return *board_; }

    const CellSet& raked() const { return raked_; }
    const CellSet& ornaments() const { return ornaments_; }
    bool is_raked(Cell c) const { return raked_.test(board_->index(c)); }
    bool has_ornament(Cell c) const { return ornaments_.test(board_->index(c)); }

    int leaves_collected() const { return leaves_collected_; }
    int moves_done() const { return moves_done_; }
    bool deadlocked() const { return deadlocked_; }

    /// Empty while the monk stands on the perimeter.
    const std::optional<MonkOnSand>& monk() const { return monk_; }
    bool on_perimeter() const { return !monk_.has_value(); }

    /// Uncollected leaf order on this square, or 0.
    int leaf_at(Cell c) const;
    /// Unraked, free of objects; a leaf counts as free only when it is next in order.
    bool enterable(Cell c) const;
    /// Inside the garden, unraked, and holding no rock, ornament or leaf.
    bool accepts_ornament(Cell c) const;
    /// How many squares the ornament on `from` can be pushed towards `dir`.
    int push_headroom(Cell from, Direction dir) const;

    int required_remaining() const { return board_->required_count() - required_raked_; }

    /// Equality and hash over the garden contents (rake mask, ornaments, leaf
    /// progress), ignoring the monk and the move counter.
    bool same_garden(const GameState& other) const;
    std::size_t garden_hash() const;

private:
    friend class MoveRun;

    const Board* board_;
    CellSet raked_;
    CellSet ornaments_;
    int required_raked_ = 0;
    int leaves_collected_ = 0;
    int moves_done_ = 0;
    bool deadlocked_ = false;
    std::optional<MonkOnSand> monk_;
};

/// One (p, d) gene pair: requested push count and a direction choice in {1, 2}.
struct ClausePair {
    int push = 1;
    int choice = 1;

    friend bool operator==(const ClausePair&, const ClausePair&) = default;
};

/// Encoded move: a perimeter face plus the pairs consumed at successive stops.
struct Clause {
    int entry = 1;
    std::array<ClausePair, kClausePairs> pairs{};

    friend bool operator==(const Clause&, const Clause&) = default;
};

/// Decision actually taken at one stop.
struct Decision {
    int push = 0;  // squares the blocking ornament was pushed
    int pick = 0;  // index into the continuation list

    friend bool operator==(const Decision&, const Decision&) = default;
    friend auto operator<=>(const Decision&, const Decision&) = default;
};

/// Canonical label of a complete move: replaying it from the parent state
/// reproduces the child state.
struct MoveDescriptor {
    int entry = 0;
    std::vector<Decision> decisions;

    friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
    friend auto operator<=>(const MoveDescriptor&, const MoveDescriptor&) = default;
};

/// The clause that reproduces a descriptor (d = pick + 1, unused pairs 0/1).
Clause to_clause(const MoveDescriptor& move);

enum class MoveResult : std::uint8_t { Completed, InvalidEntry, Deadlock, DecisionsExhausted };

std::string_view to_string(MoveResult r);

struct PushEvent {
    Cell from;
    Cell to;
};

struct MoveTrace {
    int entry = 0;
    std::vector<Cell> path;  // every square the monk stood on, in order
    std::vector<PushEvent> pushes;
    std::vector<int> collected;  // leaf orders picked up
    std::vector<Decision> decisions;
    std::vector<int> option_counts;  // continuation list length at each stop
};

struct MoveOutcome {
    MoveResult result = MoveResult::InvalidEntry;
    MoveTrace trace;
};

using Continuations = boost::container::static_vector<Direction, 2>;

/// Lateral ways out of the monk's current stop, in N, E, S, W order. A
/// perimeter face is excluded while the move has touched only one square.
/// Throws std::logic_error if the monk is not on sand.
Continuations available_continuations(const GameState& state);

/// Step-by-step execution of one move. Both the clause decoder and the move
/// enumerator drive this; at every stop the caller supplies a push count and
/// then a continuation index.
class MoveRun {
public:
    enum class Phase : std::uint8_t { AwaitingPush, AwaitingChoice, Finished };

    /// Throws std::logic_error when the monk is not on the perimeter or the
    /// state is deadlocked, std::out_of_range for a bad face.
    MoveRun(const GameState& start, int entry, bool record_path = true);

    Phase phase() const { return phase_; }
    bool finished() const { return phase_ == Phase::Finished; }
    MoveResult result() const { return result_; }

    int max_push() const { return max_push_; }
    void push(int count);

    const Continuations& options() const { return options_; }
    void choose(int index);

    int stops() const { return stops_; }
    const GameState& state() const { return state_; }
    GameState release() && { return std::move(state_); }
    const MoveTrace& trace() const { return trace_; }
    MoveTrace release_trace() { return std::move(trace_); }

private:
    void enter(Cell c);
    void vacate();
    void slide();
    void halt();
    void exit_to_perimeter();
    void finish(MoveResult r);

    GameState state_;
    MoveTrace trace_;
    Phase phase_ = Phase::Finished;
    MoveResult result_ = MoveResult::InvalidEntry;
    Continuations options_;
    int max_push_ = 0;
    int stops_ = 0;
    int steps_ = 0;
    bool record_path_;
};

/// Executes one clause. InvalidEntry leaves the state untouched; Deadlock and
/// DecisionsExhausted mark it deadlocked; Completed increments moves_done.
MoveOutcome execute_move(GameState& state, const Clause& clause, bool record_path = true);

/// Replays an exact move. Throws std::invalid_argument if the descriptor does
/// not describe a completed move from this state.
GameState apply_move(const GameState& state, const MoveDescriptor& move);

/// Unraked required squares over the initial required count; 0 once all are raked.
double area_fitness(const GameState& state);

/// Every required square raked and the monk back on the perimeter.
bool is_solved(const GameState& state);

struct ScriptResult {
    GameState final_state;
    int moves_done = 0;
    double area_fitness = 1.0;
    bool solved = false;
    std::vector<MoveOutcome> outcomes;
};

/// Runs clauses in order, skipping invalid entries and stopping at the first
/// deadlock or once the garden is solved.
ScriptResult execute_script(GameState state, std::span<const Clause> clauses, bool record_path = true);

}  // namespace zengarden
