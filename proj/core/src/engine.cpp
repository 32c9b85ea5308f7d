#include "zengarden/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace zengarden {

namespace {

constexpr Direction kCompass[] = {Direction::North, Direction::East, Direction::South, Direction::West};

}  // namespace

// ---------------------------------------------------------------- GameState

GameState::GameState(const Board& board)
    : board_(&board), raked_(board.cell_count()), ornaments_(board.cell_count()) {
    for (int i = 0; i < board.cell_count(); ++i)
        if (board.at(i) == CellKind::Ornament) ornaments_.set(i);
}

int GameState::leaf_at(Cell c) const {
    const int order = leaf_order(board_->at(c));
    return order > leaves_collected_ ? order : 0;
}

bool GameState::enterable(Cell c) const {
    if (!board_->contains(c)) return false;
    const int i = board_->index(c);
    if (board_->at(i) == CellKind::Rock || raked_.test(i) || ornaments_.test(i)) return false;
    const int leaf = leaf_at(c);
    return leaf == 0 || leaf == leaves_collected_ + 1;
}

bool GameState::accepts_ornament(Cell c) const {
    if (!board_->contains(c)) return false;
    const int i = board_->index(c);
    return board_->at(i) != CellKind::Rock && !raked_.test(i) && !ornaments_.test(i) && leaf_at(c) == 0;
}

int GameState::push_headroom(Cell from, Direction dir) const {
    int n = 0;
    for (Cell t = neighbour(from, dir); accepts_ornament(t); t = neighbour(t, dir)) ++n;
    return n;
}

bool GameState::same_garden(const GameState& other) const {
    return leaves_collected_ == other.leaves_collected_ && raked_ == other.raked_ && ornaments_ == other.ornaments_;
}

std::size_t GameState::garden_hash() const {
    return (raked_.hash() * 31 + ornaments_.hash()) * 4 + static_cast<std::size_t>(leaves_collected_);
}

// ---------------------------------------------------------------- helpers

Clause to_clause(const MoveDescriptor& move) {
    if (move.decisions.size() > static_cast<std::size_t>(kClausePairs))
        throw std::invalid_argument("move has more decisions than a clause can encode");
    Clause c;
    c.entry = move.entry;
    for (auto& p : c.pairs) p = {0, 1};
    for (std::size_t i = 0; i < move.decisions.size(); ++i)
        c.pairs[i] = {move.decisions[i].push, move.decisions[i].pick + 1};
    return c;
}

std::string_view to_string(MoveResult r) {
    switch (r) {
        case MoveResult::Completed: return "completed";
        case MoveResult::InvalidEntry: return "invalid-entry";
        case MoveResult::Deadlock: return "deadlock";
        case MoveResult::DecisionsExhausted: return "decisions-exhausted";
    }
    return "?";
}

Continuations available_continuations(const GameState& state) {
    const auto& monk = state.monk();
    if (!monk) throw std::logic_error("available_continuations: monk is on the perimeter");
    const Board& board = state.board();
    Continuations out;
    for (Direction d : kCompass) {
        if (!perpendicular(d, monk->heading)) continue;
        const Cell n = neighbour(monk->cell, d);
        if (!board.contains(n)) {
            if (monk->squares_visited >= 2) out.push_back(d);
        } else if (state.enterable(n)) {
            out.push_back(d);
        } else if (state.has_ornament(n) && state.push_headroom(n, d) >= 1) {
            out.push_back(d);
        }
    }
    return out;
}

// ---------------------------------------------------------------- MoveRun

MoveRun::MoveRun(const GameState& start, int entry, bool record_path) : state_(start), record_path_(record_path) {
    if (!start.on_perimeter()) throw std::logic_error("move started while the monk is on sand");
    if (start.deadlocked()) throw std::logic_error("move started from a deadlocked state");
    const PerimeterEntry e = start.board().entry_of(entry);
    trace_.entry = entry;

    if (!state_.enterable(e.cell) || !state_.board().contains(neighbour(e.cell, e.heading))) {
        // Entry square blocked, or sliding straight through would return to
        // the perimeter after a single square.
        finish(MoveResult::InvalidEntry);
        return;
    }
    state_.monk_ = MonkOnSand{e.cell, e.heading, 0};
    enter(e.cell);
    slide();
}

void MoveRun::enter(Cell c) {
    auto& monk = *state_.monk_;
    monk.cell = c;
    ++monk.squares_visited;
    if (const int leaf = state_.leaf_at(c); leaf != 0) {
        // enterable() only admits the next leaf in order
        ++state_.leaves_collected_;
        trace_.collected.push_back(leaf);
    }
    if (record_path_) trace_.path.push_back(c);
    if (++steps_ > 2 * state_.board().cell_count() + 2) throw std::logic_error("move exceeded its step bound");
}

void MoveRun::vacate() {
    const Board& board = state_.board();
    const int i = board.index(state_.monk_->cell);
    state_.raked_.set(i);
    if (board.is_required(i)) ++state_.required_raked_;
}

void MoveRun::exit_to_perimeter() {
    vacate();
    state_.monk_.reset();
    ++state_.moves_done_;
    finish(MoveResult::Completed);
}

void MoveRun::slide() {
    const Board& board = state_.board();
    for (;;) {
        const auto& monk = *state_.monk_;
        const Cell next = neighbour(monk.cell, monk.heading);
        if (!board.contains(next)) {
            exit_to_perimeter();
            return;
        }
        if (!state_.enterable(next)) {
            halt();
            return;
        }
        vacate();
        enter(next);
    }
}

void MoveRun::halt() {
    if (++stops_ > kClausePairs) {
        state_.deadlocked_ = true;
        finish(MoveResult::DecisionsExhausted);
        return;
    }
    const auto& monk = *state_.monk_;
    const Cell ahead = neighbour(monk.cell, monk.heading);
    max_push_ = state_.has_ornament(ahead) ? state_.push_headroom(ahead, monk.heading) : 0;
    options_.clear();
    phase_ = Phase::AwaitingPush;
}

void MoveRun::push(int count) {
    if (phase_ != Phase::AwaitingPush) throw std::logic_error("push outside a stop");
    if (count < 0 || count > max_push_) throw std::invalid_argument("push count out of range");

    const Board& board = state_.board();
    for (int k = 0; k < count; ++k) {
        const auto& monk = *state_.monk_;
        const Cell from = neighbour(monk.cell, monk.heading);
        const Cell to = neighbour(from, monk.heading);
        state_.ornaments_.reset(board.index(from));
        state_.ornaments_.set(board.index(to));
        trace_.pushes.push_back({from, to});
        vacate();
        enter(from);
    }
    trace_.decisions.push_back({count, 0});
    max_push_ = 0;

    options_ = available_continuations(state_);
    trace_.option_counts.push_back(static_cast<int>(options_.size()));
    if (options_.empty()) {
        state_.deadlocked_ = true;
        finish(MoveResult::Deadlock);
        return;
    }
    phase_ = Phase::AwaitingChoice;
}

void MoveRun::choose(int index) {
    if (phase_ != Phase::AwaitingChoice) throw std::logic_error("choice outside a stop");
    if (index < 0 || index >= static_cast<int>(options_.size()))
        throw std::invalid_argument("continuation index out of range");

    trace_.decisions.back().pick = index;
    auto& monk = *state_.monk_;
    monk.heading = options_[static_cast<std::size_t>(index)];
    options_.clear();

    const Cell next = neighbour(monk.cell, monk.heading);
    if (!state_.board().contains(next)) {
        exit_to_perimeter();
    } else if (state_.enterable(next)) {
        vacate();
        enter(next);
        slide();
    } else {
        // turned to face an ornament
        halt();
    }
}

void MoveRun::finish(MoveResult r) {
    result_ = r;
    phase_ = Phase::Finished;
    options_.clear();
    max_push_ = 0;
}

// ---------------------------------------------------------------- whole moves

MoveOutcome execute_move(GameState& state, const Clause& clause, bool record_path) {
    MoveRun run(state, clause.entry, record_path);
    for (const ClausePair& pair : clause.pairs) {
        if (run.finished()) break;
        run.push(std::clamp(pair.push, 0, run.max_push()));
        if (run.finished()) break;
        const int n = static_cast<int>(run.options().size());
        run.choose(((pair.choice - 1) % n + n) % n);
    }
    // A ninth stop finishes the run as DecisionsExhausted inside halt().
    MoveOutcome out{run.result(), run.release_trace()};
    if (out.result != MoveResult::InvalidEntry) state = std::move(run).release();
    return out;
}

GameState apply_move(const GameState& state, const MoveDescriptor& move) {
    MoveRun run(state, move.entry, false);
    for (const Decision& d : move.decisions) {
        if (run.phase() != MoveRun::Phase::AwaitingPush) throw std::invalid_argument("descriptor has extra decisions");
        run.push(d.push);
        if (run.finished()) break;
        run.choose(d.pick);
    }
    if (!run.finished() || run.result() != MoveResult::Completed)
        throw std::invalid_argument("descriptor does not describe a completed move");
    return std::move(run).release();
}

double area_fitness(const GameState& state) {
    return static_cast<double>(state.required_remaining()) / state.board().required_count();
}

bool is_solved(const GameState& state) { return state.required_remaining() == 0 && state.on_perimeter(); }

ScriptResult execute_script(GameState state, std::span<const Clause> clauses, bool record_path) {
    std::vector<MoveOutcome> outcomes;
    for (const Clause& clause : clauses) {
        if (state.deadlocked() || is_solved(state)) break;
        outcomes.push_back(execute_move(state, clause, record_path));
    }
    const int moves = state.moves_done();
    const double area = area_fitness(state);
    const bool solved = is_solved(state);
    return {std::move(state), moves, area, solved, std::move(outcomes)};
}

}  // namespace zengarden
