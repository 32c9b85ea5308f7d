// zengarden: validate, solve, replay, benchmark and fuzz Zen garden boards.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "zengarden/astar.hpp"
#include "zengarden/bench.hpp"
#include "zengarden/board.hpp"
#include "zengarden/engine.hpp"
#include "zengarden/fuzz.hpp"
#include "zengarden/ga.hpp"
#include "zengarden/script.hpp"

namespace zg = zengarden;
using nlohmann::json;

namespace {

enum Exit : int { kSolved = 0, kError = 1, kUnsolvable = 2, kNotFound = 3 };

struct SolveOptions {
    std::string board;
    std::string solver = "astar";
    std::optional<std::uint64_t> seed;
    std::optional<int> target;
    std::string config;
    std::uint64_t max_nodes = zg::astar::SearchLimits{}.max_nodes;
    double max_seconds = zg::astar::SearchLimits{}.max_seconds;
    bool merge = false;
    bool json = false;
};

json script_json(const std::vector<zg::Clause>& clauses) {
    json a = json::array();
    for (const auto& c : clauses) a.push_back(zg::format_clause(c));
    return a;
}

zg::ga::Config ga_config(const std::string& path, std::optional<std::uint64_t> seed) {
    zg::ga::Config cfg = path.empty() ? zg::ga::Config{} : zg::ga::load_config(path);
    if (seed) cfg.rng_seed = *seed;
    return cfg;
}

int cmd_solve(const SolveOptions& o) {
    const zg::Board board = zg::load_board(o.board);

    if (o.solver == "astar") {
        zg::astar::SearchLimits limits;
        limits.max_nodes = o.max_nodes;
        limits.max_seconds = o.max_seconds;
        limits.merge_duplicates = o.merge;
        const auto report = zg::astar::solve(board, limits);
        const int code = report.optimal_length ? kSolved : report.exhausted ? kUnsolvable : kNotFound;

        if (o.json) {
            json sols = json::array();
            for (const auto& s : report.solutions) {
                std::vector<zg::Clause> clauses;
                for (const auto& m : s) clauses.push_back(zg::to_clause(m));
                sols.push_back(script_json(clauses));
            }
            json j = {{"board", board.name()},
                      {"solver", "astar"},
                      {"optimal_length", report.optimal_length ? json(*report.optimal_length) : json(nullptr)},
                      {"exhausted", report.exhausted},
                      {"nodes_evaluated", report.nodes_evaluated},
                      {"nodes_expanded", report.nodes_expanded},
                      {"merge_duplicates", o.merge},
                      {"solution_count", report.solutions.size()},
                      {"solutions", std::move(sols)}};
            std::cout << j.dump(2) << '\n';
            return code;
        }
        fmt::print("board {} ({}x{}, {} squares to rake)\n", board.name(), board.width(), board.height(),
                   board.required_count());
        if (report.optimal_length) {
            fmt::print("optimal length {} ({} optimal solution{})\n", *report.optimal_length, report.solutions.size(),
                       report.solutions.size() == 1 ? "" : "s");
            std::vector<zg::Clause> first;
            for (const auto& m : report.solutions.front()) first.push_back(zg::to_clause(m));
            fmt::print("first solution:\n{}", zg::format_script(first));
        } else if (report.exhausted) {
            fmt::print("no solution exists\n");
        } else {
            fmt::print("search limit reached without a solution\n");
        }
        fmt::print("nodes evaluated {}, expanded {}, {:.2f} s{}\n", report.nodes_evaluated, report.nodes_expanded,
                   report.seconds, report.exhausted ? "" : " (limit reached)");
        return code;
    }

    if (o.solver == "ga") {
        const zg::ga::Config cfg = ga_config(o.config, o.seed);
        const auto started = std::chrono::steady_clock::now();
        const auto report = zg::ga::run(board, cfg, o.target);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        const int code = report.solved ? kSolved : kNotFound;

        if (o.json) {
            json j = {{"board", board.name()},
                      {"solver", "ga"},
                      {"seed", cfg.rng_seed},
                      {"solved", report.solved},
                      {"moves", report.best.moves},
                      {"fitness", report.best.fitness},
                      {"area_fitness", report.best.area},
                      {"fitness_evaluations", report.fitness_evaluations},
                      {"generations", report.generations_elapsed},
                      {"generation_of_first_optimum",
                       report.generation_of_first_optimum ? json(*report.generation_of_first_optimum) : json(nullptr)},
                      {"best_fitness", report.best_fitness},
                      {"script", script_json(report.best_script)}};
            std::cout << j.dump(2) << '\n';
            return code;
        }
        fmt::print("board {} ({}x{}), seed {}\n", board.name(), board.width(), board.height(), cfg.rng_seed);
        if (report.solved)
            fmt::print("solved in {} moves (fitness {:.2f})\n", report.best.moves, report.best.fitness);
        else
            fmt::print("no full solution; best fitness {:.2f}, area fitness {:.3f}\n", report.best.fitness,
                       report.best.area);
        fmt::print("script:\n{}", zg::format_script(report.best_script));
        fmt::print("fitness evaluations {}, generations {}, {:.2f} s\n", report.fitness_evaluations,
                   report.generations_elapsed, seconds);
        return code;
    }
    throw CLI::ValidationError("--solver", "must be astar or ga");
}

int cmd_replay(const std::string& board_path, const std::string& script_path, bool trace) {
    const zg::Board board = zg::load_board(board_path);
    const auto clauses = zg::load_script(script_path, &board);

    zg::GameState state(board);
    fmt::print("{}\n", zg::render(state));
    int line = 0;
    for (const auto& clause : clauses) {
        ++line;
        if (state.deadlocked() || zg::is_solved(state)) break;
        const auto outcome = zg::execute_move(state, clause);
        if (outcome.result == zg::MoveResult::InvalidEntry) {
            fmt::print("clause {} [{}]: skipped\n\n", line, zg::format_clause(clause));
            continue;
        }
        fmt::print("clause {} [{}]: {}\n", line, zg::format_clause(clause), zg::to_string(outcome.result));
        if (trace) {
            std::string path;
            for (const auto& c : outcome.trace.path) path += fmt::format(" ({},{})", c.col, c.row);
            fmt::print("  path:{}\n", path);
            for (const auto& p : outcome.trace.pushes)
                fmt::print("  push ({},{}) -> ({},{})\n", p.from.col, p.from.row, p.to.col, p.to.row);
            for (int leaf : outcome.trace.collected) fmt::print("  collected leaf {}\n", leaf);
        }
        fmt::print("{}\n", zg::render(state));
    }
    const int moves = state.moves_done();
    if (zg::is_solved(state)) {
        fmt::print("SOLVED in {} moves\n", moves);
        return kSolved;
    }
    if (state.deadlocked()) {
        fmt::print("DEADLOCK after {} moves\n", moves);
        return kNotFound;
    }
    fmt::print("INCOMPLETE after {} moves\n", moves);
    return kNotFound;
}

struct BenchOptions {
    std::string dir;
    std::string out = ".";
    std::string config;
    int runs = 50;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::uint64_t max_nodes = zg::astar::SearchLimits{}.max_nodes;
    double max_seconds = zg::astar::SearchLimits{}.max_seconds;
    bool merge = false;
    bool json = false;
};

int cmd_bench(const BenchOptions& o) {
    zg::bench::Config cfg;
    cfg.runs = o.runs;
    cfg.ga = ga_config(o.config, std::nullopt);
    cfg.base_seed = o.seed;
    cfg.threads = o.threads;
    cfg.limits.max_nodes = o.max_nodes;
    cfg.limits.max_seconds = o.max_seconds;
    cfg.limits.merge_duplicates = o.merge;

    const auto boards = zg::bench::load_suite(o.dir);
    std::vector<zg::bench::BoardResult> results;
    for (const auto& b : boards) {
        results.push_back(zg::bench::run_board(b, cfg));
        std::cerr << fmt::format("{}: {} (A* evals {})\n", b.name(), zg::bench::to_string(results.back().status),
                                 results.back().astar_evals);
    }
    const auto summary = zg::bench::summarize(results);
    const auto payload = zg::bench::to_json(results, summary, cfg);

    std::filesystem::create_directories(o.out);
    std::ofstream(std::filesystem::path(o.out) / "results.csv") << zg::bench::to_csv(summary);
    std::ofstream(std::filesystem::path(o.out) / "results.json") << payload.dump(2) << '\n';

    if (o.json)
        std::cout << payload.dump(2) << '\n';
    else
        std::cout << zg::bench::format_table(summary);
    return kSolved;
}

int cmd_fuzz(std::uint64_t iters, int max_dim, std::uint64_t seed) {
    const auto report = zg::fuzz::run({iters, max_dim, seed});
    if (report.failure) {
        const auto& f = *report.failure;
        fmt::print("FAIL after {} iterations: {}\n", report.iterations, f.message);
        fmt::print("reproduce with: zengarden fuzz --iters 1 --max-dim {} --seed {}\n", max_dim, f.seed);
        fmt::print("board:\n{}script:\n{}", f.board, f.script);
        return kError;
    }
    fmt::print("{} ok ({} moves checked)\n", report.iterations, report.moves_checked);
    return kSolved;
}

int cmd_validate(const std::string& path) {
    const zg::Board board = zg::load_board(path);
    fmt::print("{}: {}x{}, circumference {}, {} squares to rake, {} leaves\n", board.name(), board.width(),
               board.height(), board.circumference(), board.required_count(), board.leaf_count());
    return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zen puzzle garden solvers"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto* s = app.add_subcommand("solve", "Solve a board with A* or the genetic algorithm");
    s->add_option("board", solve.board, "Board file")->required()->check(CLI::ExistingFile);
    s->add_option("--solver", solve.solver, "astar or ga")->check(CLI::IsMember({"astar", "ga"}));
    s->add_option("--seed", solve.seed, "GA random seed");
    s->add_option("--target", solve.target, "GA: stop at a solution of at most this many moves");
    s->add_option("--config", solve.config, "GA config file")->check(CLI::ExistingFile);
    s->add_option("--max-nodes", solve.max_nodes, "A* node limit");
    s->add_option("--max-seconds", solve.max_seconds, "A* time limit");
    s->add_flag("--merge-duplicates", solve.merge, "A*: skip gardens already reached at equal or smaller depth");
    s->add_flag("--json", solve.json, "Machine-readable report");

    std::string replay_board, replay_script;
    bool replay_trace = false;
    auto* r = app.add_subcommand("replay", "Play a script and print the garden after each move");
    r->add_option("board", replay_board, "Board file")->required()->check(CLI::ExistingFile);
    r->add_option("script", replay_script, "Script file")->required()->check(CLI::ExistingFile);
    r->add_flag("--trace", replay_trace, "Print the monk's path and pushes");

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "Compare A* and the GA over a directory of boards");
    b->add_option("dir", bench.dir, "Directory of .zpg boards")->required()->check(CLI::ExistingDirectory);
    b->add_option("--runs", bench.runs, "GA runs per board")->check(CLI::NonNegativeNumber);
    b->add_option("--seed", bench.seed, "Base seed; run i uses seed + i");
    b->add_option("--config", bench.config, "GA config file")->check(CLI::ExistingFile);
    b->add_option("--max-nodes", bench.max_nodes, "A* node limit");
    b->add_option("--max-seconds", bench.max_seconds, "A* time limit");
    b->add_option("--threads", bench.threads, "Worker threads for GA runs (0: all cores)");
    b->add_option("--out", bench.out, "Directory for results.csv and results.json");
    b->add_flag("--merge-duplicates", bench.merge, "A*: skip gardens already reached");
    b->add_flag("--json", bench.json, "Print JSON instead of the table");

    std::uint64_t fuzz_iters = 100000, fuzz_seed = 1;
    int fuzz_dim = 6;
    auto* f = app.add_subcommand("fuzz", "Check engine invariants on random boards and clauses");
    f->add_option("--iters", fuzz_iters, "Iterations");
    f->add_option("--max-dim", fuzz_dim, "Largest board side")->check(CLI::Range(1, zg::Board::kMaxDim));
    f->add_option("--seed", fuzz_seed, "Seed of the first iteration");

    std::string validate_path;
    auto* v = app.add_subcommand("validate", "Parse a board and print its summary");
    v->add_option("board", validate_path, "Board file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (s->parsed()) return cmd_solve(solve);
        if (r->parsed()) return cmd_replay(replay_board, replay_script, replay_trace);
        if (b->parsed()) return cmd_bench(bench);
        if (f->parsed()) return cmd_fuzz(fuzz_iters, fuzz_dim, fuzz_seed);
        if (v->parsed()) return cmd_validate(validate_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
