#include "zengarden/fuzz.hpp"

#include <random>
#include <set>

#include "zengarden/script.hpp"

namespace zengarden::fuzz {

namespace {

bool same_snapshot(const Snapshot& a, const Snapshot& b) {
    return a.raked == b.raked && a.ornaments == b.ornaments && a.leaves_collected == b.leaves_collected &&
           a.moves_done == b.moves_done && a.deadlocked == b.deadlocked && a.monk == b.monk;
}

std::string where(Cell c) { return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")"; }

}  // namespace

Snapshot Snapshot::of(const GameState& state) {
    return {state.raked(), state.ornaments(), state.leaves_collected(), state.moves_done(), state.deadlocked(),
            state.monk()};
}

std::optional<std::string> check_move(const Board& board, const Snapshot& before, const MoveOutcome& outcome,
                                      const Snapshot& after) {
    const MoveTrace& t = outcome.trace;
    if (before.monk) return "move started with the monk on sand";

    if (outcome.result == MoveResult::InvalidEntry) {
        if (!same_snapshot(before, after)) return "invalid entry changed the state";
        if (!t.path.empty()) return "invalid entry recorded a path";
        return std::nullopt;
    }

    // termination
    if (t.path.size() > static_cast<std::size_t>(2 * board.cell_count()))
        return "path of " + std::to_string(t.path.size()) + " squares exceeds the 2xy bound";

    // monotonicity
    if (!before.raked.is_subset_of(after.raked)) return "a raked square was unraked";
    if (after.leaves_collected < before.leaves_collected) return "leaf count decreased";
    if (after.moves_done < before.moves_done) return "move count decreased";

    // rake on vacate
    std::set<Cell> visited;
    CellSet expected = before.raked;
    for (std::size_t i = 0; i < t.path.size(); ++i) {
        const Cell c = t.path[i];
        if (!board.contains(c)) return "path leaves the garden at " + where(c);
        if (board.at(c) == CellKind::Rock) return "monk entered a rock at " + where(c);
        if (before.raked.test(board.index(c))) return "monk entered raked square " + where(c);
        if (!visited.insert(c).second) return "monk revisited " + where(c);
        const bool last = i + 1 == t.path.size();
        if (!last || !after.monk) expected.set(board.index(c));
    }
    if (after.monk) {
        if (t.path.empty() || t.path.back() != after.monk->cell) return "monk position disagrees with the trace";
        if (after.raked.test(board.index(after.monk->cell)))
            return "square " + where(after.monk->cell) + " raked while the monk stands on it";
    }
    if (!(expected == after.raked)) return "raked set differs from the squares vacated";

    // outcome-specific
    switch (outcome.result) {
        case MoveResult::Completed:
            if (after.monk) return "completed move left the monk on sand";
            if (after.deadlocked) return "completed move marked the state deadlocked";
            if (after.moves_done != before.moves_done + 1) return "completed move did not count";
            if (visited.size() < 2) return "step back: completed move touched a single square";
            break;
        case MoveResult::Deadlock:
        case MoveResult::DecisionsExhausted:
            if (!after.deadlocked || !after.monk) return "dead end not recorded in the state";
            if (after.moves_done != before.moves_done) return "dead end counted as a move";
            if (outcome.result == MoveResult::DecisionsExhausted &&
                t.decisions.size() != static_cast<std::size_t>(kClausePairs))
                return "decisions exhausted before all pairs were used";
            break;
        case MoveResult::InvalidEntry: break;
    }

    // ornament conservation
    if (before.ornaments.count() != after.ornaments.count()) return "ornament count changed";
    CellSet moved = before.ornaments;
    for (const auto& p : t.pushes) {
        if (!moved.test(board.index(p.from))) return "push from a square without an ornament";
        if (!board.contains(p.to)) return "ornament pushed onto the perimeter";
        if (moved.test(board.index(p.to))) return "ornament pushed onto another ornament";
        moved.reset(board.index(p.from));
        moved.set(board.index(p.to));
    }
    if (!(moved == after.ornaments)) return "ornament positions disagree with the recorded pushes";
    for (int i = 0; i < board.cell_count(); ++i) {
        if (!after.ornaments.test(i)) continue;
        if (board.at(i) == CellKind::Rock) return "ornament on a rock at " + where(board.cell_at(i));
        if (after.raked.test(i)) return "ornament on a raked square at " + where(board.cell_at(i));
    }

    // leaf order
    if (t.collected.size() != static_cast<std::size_t>(after.leaves_collected - before.leaves_collected))
        return "leaf count change disagrees with collections";
    for (std::size_t i = 0; i < t.collected.size(); ++i) {
        const int order = t.collected[i];
        if (order != before.leaves_collected + 1 + static_cast<int>(i))
            return "leaf " + std::to_string(order) + " collected out of order";
        const auto cell = board.leaf(order);
        if (!cell || !visited.contains(*cell)) return "leaf " + std::to_string(order) + " collected without a visit";
    }

    for (int n : t.option_counts)
        if (n > 2) return "stop offered " + std::to_string(n) + " continuations";
    return std::nullopt;
}

Board random_board(std::uint64_t seed, int max_dim) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, std::max(1, max_dim));
    const int w = dim(rng);
    const int h = dim(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<CellKind> cells(static_cast<std::size_t>(w * h));
    for (auto& c : cells) {
        const double r = u(rng);
        c = r < 0.68 ? CellKind::Sand : r < 0.82 ? CellKind::Rock : CellKind::Ornament;
    }
    std::uniform_int_distribution<std::size_t> any(0, cells.size() - 1);
    for (int order = 1; order <= kMaxLeafOrder; ++order) {
        if (u(rng) < 0.35) {
            auto& c = cells[any(rng)];
            if (c == CellKind::Sand) c = leaf_kind(order);
        }
    }
    bool has_required = false;
    for (auto c : cells) has_required |= c != CellKind::Rock && c != CellKind::Ornament;
    if (!has_required) cells[0] = CellKind::Sand;
    return Board(w, h, std::move(cells), "fuzz-" + std::to_string(seed));
}

Report run(const Config& config) {
    Report report;
    for (std::uint64_t i = 0; i < config.iterations; ++i) {
        const std::uint64_t seed = config.seed + i;
        const Board board = random_board(seed, config.max_dim);
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> entry(1, board.circumference());
        std::uniform_int_distribution<int> push(0, std::max(board.width(), board.height()));
        std::uniform_int_distribution<int> choice(1, 2);

        GameState state(board);
        std::vector<Clause> script;
        std::optional<std::string> problem;
        for (int k = 0; k < config.script_length && !problem; ++k) {
            if (state.deadlocked() || is_solved(state)) break;
            Clause clause;
            clause.entry = entry(rng);
            for (auto& p : clause.pairs) p = {push(rng), choice(rng)};
            script.push_back(clause);

            const Snapshot before = Snapshot::of(state);
            try {
                const MoveOutcome outcome = execute_move(state, clause);
                ++report.moves_checked;
                problem = check_move(board, before, outcome, Snapshot::of(state));
                if (!problem && outcome.result == MoveResult::Deadlock && !available_continuations(state).empty())
                    problem = "deadlock reported while a continuation exists";
            } catch (const std::exception& e) {
                problem = std::string("exception: ") + e.what();
            }
        }
        ++report.iterations;
        if (problem) {
            report.failure = Failure{seed, *problem, board.serialize(), format_script(script)};
            break;
        }
    }
    return report;
}

}  // namespace zengarden::fuzz
