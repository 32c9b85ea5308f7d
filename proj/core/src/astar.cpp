#include "zengarden/astar.hpp"

#include <array>
#include <chrono>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace zengarden::astar {

namespace {

void branch(MoveRun run, std::vector<Successor>& out) {
    switch (run.phase()) {
        case MoveRun::Phase::Finished:
            if (run.result() == MoveResult::Completed) {
                MoveDescriptor move{run.trace().entry, run.trace().decisions};
                out.push_back({std::move(move), std::move(run).release()});
            }
            return;
        case MoveRun::Phase::AwaitingPush:
            for (int k = 0; k <= run.max_push(); ++k) {
                MoveRun next = run;
                next.push(k);
                branch(std::move(next), out);
            }
            return;
        case MoveRun::Phase::AwaitingChoice:
            for (int i = 0; i < static_cast<int>(run.options().size()); ++i) {
                MoveRun next = run;
                next.choose(i);
                branch(std::move(next), out);
            }
            return;
    }
}

// Arena entry for an expanded or queued node. Moves are packed: a decision
// byte is (push << 1) | pick, which holds pushes up to 63 squares.
struct Node {
    std::uint32_t parent;
    std::uint16_t entry;
    std::uint8_t decision_count;
    std::array<std::uint8_t, kClausePairs> decisions;
};

constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

Node pack(std::uint32_t parent, const MoveDescriptor& move) {
    Node n{parent, static_cast<std::uint16_t>(move.entry), static_cast<std::uint8_t>(move.decisions.size()), {}};
    for (std::size_t i = 0; i < move.decisions.size(); ++i)
        n.decisions[i] = static_cast<std::uint8_t>((move.decisions[i].push << 1) | move.decisions[i].pick);
    return n;
}

MoveDescriptor unpack(const Node& n) {
    MoveDescriptor m{n.entry, {}};
    for (int i = 0; i < n.decision_count; ++i)
        m.decisions.push_back({n.decisions[static_cast<std::size_t>(i)] >> 1, n.decisions[static_cast<std::size_t>(i)] & 1});
    return m;
}

struct Open {
    std::uint32_t node;
    int g;
    GameState state;
};

struct GardenHash {
    std::size_t operator()(const GameState& s) const { return s.garden_hash(); }
};
struct GardenEq {
    bool operator()(const GameState& a, const GameState& b) const { return a.same_garden(b); }
};

/// Open list keyed by f scaled to an integer: g * R + remaining, where R is
/// the board's required count. Keys of popped nodes never decrease (every
/// child adds R to g * R and h <= 1), so a bucket array with a forward cursor
/// gives exact f ordering with FIFO ties.
class BucketQueue {
public:
    void push(std::size_t key, Open item) {
        if (key >= buckets_.size()) buckets_.resize(key + 1);
        buckets_[key].push_back(std::move(item));
        ++size_;
    }
    bool empty() const { return size_ == 0; }
    std::size_t front_key() {
        while (buckets_[cursor_].empty()) ++cursor_;
        return cursor_;
    }
    Open pop() {
        auto& b = buckets_[front_key()];
        Open o = std::move(b.front());
        b.pop_front();
        --size_;
        return o;
    }

private:
    std::vector<std::deque<Open>> buckets_;
    std::size_t cursor_ = 0;
    std::size_t size_ = 0;
};

}  // namespace

std::vector<Successor> enumerate_moves(const GameState& state) {
    if (state.deadlocked()) throw std::logic_error("enumerate_moves: state is deadlocked");
    if (is_solved(state)) throw std::logic_error("enumerate_moves: state is already solved");
    std::vector<Successor> out;
    for (int c = 1; c <= state.board().circumference(); ++c) {
        MoveRun run(state, c, false);
        if (run.finished() && run.result() == MoveResult::InvalidEntry) continue;
        branch(std::move(run), out);
    }
    return out;
}

Report solve(const Board& board, const SearchLimits& limits, const Hooks& hooks) {
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - started).count(); };

    const std::size_t required = static_cast<std::size_t>(board.required_count());
    const auto key_of = [&](int g, const GameState& s) {
        return static_cast<std::size_t>(g) * required + static_cast<std::size_t>(s.required_remaining());
    };
    const auto h_of = [&](const GameState& s) { return area_fitness(s); };

    Report report;
    std::vector<Node> arena;
    BucketQueue open;
    std::unordered_map<GameState, int, GardenHash, GardenEq> seen;
    std::set<Solution> unique;
    int best = std::numeric_limits<int>::max();

    const auto path_to = [&](std::uint32_t idx) {
        Solution path;
        for (; idx != kRoot; idx = arena[idx].parent) path.push_back(unpack(arena[idx]));
        return Solution(path.rbegin(), path.rend());
    };

    GameState root(board);
    open.push(key_of(0, root), Open{kRoot, 0, std::move(root)});

    bool limit_hit = false;
    while (!open.empty()) {
        if (limits.prune && best != std::numeric_limits<int>::max() &&
            open.front_key() > static_cast<std::size_t>(best - 1) * required + required) {
            // Everything left needs more moves than the best solution.
            break;
        }
        Open node = open.pop();
        if (limits.prune && node.g + 1 > best) continue;

        if (hooks.on_pop) {
            const double h = h_of(node.state);
            hooks.on_pop(node.g, h, node.g + h, node.state);
        }
        if ((report.nodes_expanded & 255U) == 0 && elapsed() > limits.max_seconds) {
            limit_hit = true;
            break;
        }
        ++report.nodes_expanded;

        const int g = node.g + 1;
        for (auto& [move, child] : enumerate_moves(node.state)) {
            ++report.nodes_evaluated;
            if (hooks.on_child) hooks.on_child(g, h_of(child), child);

            if (child.required_remaining() == 0) {
                if (g > best) continue;
                if (g < best) {
                    best = g;
                    unique.clear();
                    report.solutions.clear();
                }
                Solution path = path_to(node.node);
                path.push_back(std::move(move));
                if (unique.insert(path).second) report.solutions.push_back(std::move(path));
                continue;
            }
            if (limits.prune && g >= best) continue;
            if (limits.merge_duplicates) {
                auto [it, inserted] = seen.try_emplace(child, g);
                if (!inserted) {
                    if (it->second <= g) continue;
                    it->second = g;
                }
            }
            arena.push_back(pack(node.node, move));
            open.push(key_of(g, child), Open{static_cast<std::uint32_t>(arena.size() - 1), g, std::move(child)});
        }
        if (report.nodes_evaluated >= limits.max_nodes) {
            limit_hit = true;
            break;
        }
    }

    if (best != std::numeric_limits<int>::max()) report.optimal_length = best;
    report.exhausted = !limit_hit;
    report.seconds = elapsed();
    return report;
}

}  // namespace zengarden::astar
