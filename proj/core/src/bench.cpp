#include "zengarden/bench.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace zengarden::bench {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
}

std::string opt(const std::optional<double>& v) { return v ? fmt::format("{:.2f}", *v) : ""; }
std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

nlohmann::json opt_json(const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

std::string_view to_string(BoardStatus s) {
    switch (s) {
        case BoardStatus::Solved: return "solved";
        case BoardStatus::Unsolvable: return "unsolvable";
        case BoardStatus::LimitReached: return "limit";
    }
    return "?";
}

BoardResult run_board(const Board& board, const Config& config) {
    BoardResult out;
    out.board = board.name();
    out.width = board.width();
    out.height = board.height();
    out.required = board.required_count();

    const astar::Report a = astar::solve(board, config.limits);
    out.astar_evals = a.nodes_evaluated;
    out.astar_solutions = a.solutions.size();
    out.optimal = a.optimal_length;
    if (a.exhausted)
        out.status = a.optimal_length ? BoardStatus::Solved : BoardStatus::Unsolvable;
    else
        out.status = BoardStatus::LimitReached;
    const std::optional<int> target = out.status == BoardStatus::Solved ? out.optimal : std::nullopt;

    out.runs.resize(static_cast<std::size_t>(std::max(0, config.runs)));
    parallel_for(out.runs.size(), config.threads, [&](std::size_t i) {
        ga::Config cfg = config.ga;
        cfg.rng_seed = config.base_seed + i;
        const ga::Report r = ga::run(board, cfg, target);
        GaRun& run = out.runs[i];
        run.seed = cfg.rng_seed;
        run.solved = r.solved;
        run.moves = r.solved ? r.best.moves : 0;
        run.optimal = r.solved && target && r.best.moves <= *target;
        run.evaluations = r.fitness_evaluations;
        run.evaluations_to_optimum = r.evaluations_to_optimum;
        run.generations = r.generations_elapsed;
        run.best_fitness = r.best.fitness;
    });
    return out;
}

Row summarize(const BoardResult& result) {
    Row row;
    row.board = result.board;
    row.status = result.status;
    row.optimal = result.optimal;
    row.astar_evals = result.astar_evals;
    row.runs = static_cast<int>(result.runs.size());

    double moves_sum = 0.0;
    double evals_sum = 0.0;
    for (const GaRun& r : result.runs) {
        if (!r.solved) continue;
        ++row.solved_runs;
        moves_sum += r.moves;
        row.ga_best = row.ga_best ? std::min(*row.ga_best, r.moves) : r.moves;
        if (r.optimal && r.evaluations_to_optimum) {
            ++row.optimal_runs;
            evals_sum += static_cast<double>(*r.evaluations_to_optimum);
        }
    }
    if (row.runs > 0) row.ga_solve_rate = static_cast<double>(row.solved_runs) / row.runs;
    if (row.solved_runs > 0) row.ga_avg = moves_sum / row.solved_runs;
    if (row.ga_avg && row.optimal && result.status == BoardStatus::Solved)
        row.ga_excess_pct = (*row.ga_avg - *row.optimal) / *row.optimal * 100.0;
    if (row.optimal_runs > 0) {
        row.ga_avg_evals = evals_sum / row.optimal_runs;
        if (row.astar_evals > 0) row.eval_ratio_pct = *row.ga_avg_evals / static_cast<double>(row.astar_evals) * 100.0;
    }
    return row;
}

Summary summarize(const std::vector<BoardResult>& results) {
    Summary s;
    for (const auto& r : results) s.rows.push_back(summarize(r));
    std::stable_sort(s.rows.begin(), s.rows.end(), [](const Row& a, const Row& b) {
        const bool sa = a.status == BoardStatus::Solved;
        const bool sb = b.status == BoardStatus::Solved;
        if (sa != sb) return sa;
        if (sa && *a.optimal != *b.optimal) return *a.optimal < *b.optimal;
        return a.board < b.board;
    });

    std::vector<double> excess, ratios;
    for (const Row& row : s.rows) {
        if (row.status != BoardStatus::Solved) continue;
        if (row.ga_excess_pct) excess.push_back(*row.ga_excess_pct);
        if (row.eval_ratio_pct) ratios.push_back(*row.eval_ratio_pct);
    }
    const auto mean = [](const std::vector<double>& v) -> std::optional<double> {
        if (v.empty()) return std::nullopt;
        double sum = 0.0;
        for (double x : v) sum += x;
        return sum / static_cast<double>(v.size());
    };
    s.mean_excess_pct = mean(excess);
    s.mean_eval_ratio_pct = mean(ratios);
    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        const std::size_t n = ratios.size();
        s.median_eval_ratio_pct = n % 2 ? ratios[n / 2] : (ratios[n / 2 - 1] + ratios[n / 2]) / 2.0;
    }
    return s;
}

std::vector<Board> load_suite(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".zpg") files.push_back(entry.path());
    if (files.empty()) throw std::runtime_error("no .zpg boards in " + dir.string());
    std::sort(files.begin(), files.end());
    std::vector<Board> boards;
    for (const auto& f : files) boards.push_back(load_board(f));
    return boards;
}

std::string to_csv(const Summary& summary) {
    std::string out = "board,optimal,ga_best,ga_avg,ga_excess_pct,astar_evals,ga_avg_evals,eval_ratio_pct,ga_solve_rate\n";
    for (const Row& r : summary.rows) {
        const std::string optimal = r.status == BoardStatus::Solved ? opt(r.optimal) : std::string(to_string(r.status));
        out += fmt::format("{},{},{},{},{},{},{},{},{:.2f}\n", r.board, optimal, opt(r.ga_best), opt(r.ga_avg),
                           opt(r.ga_excess_pct), r.astar_evals, opt(r.ga_avg_evals), opt(r.eval_ratio_pct),
                           r.ga_solve_rate);
    }
    out += fmt::format("average,,,,{},,,{},\n", opt(summary.mean_excess_pct), opt(summary.mean_eval_ratio_pct));
    out += fmt::format("median,,,,,,,{},\n", opt(summary.median_eval_ratio_pct));
    return out;
}

nlohmann::json to_json(const std::vector<BoardResult>& results, const Summary& summary, const Config& config) {
    using nlohmann::json;
    json j;
    j["config"] = {{"runs", config.runs},
                   {"base_seed", config.base_seed},
                   {"population_size", config.ga.population_size},
                   {"generations", config.ga.generations},
                   {"gene_length", config.ga.gene_length},
                   {"mutation_rate", config.ga.mutation_rate},
                   {"selection_fraction", config.ga.selection_fraction},
                   {"max_nodes", config.limits.max_nodes},
                   {"max_seconds", config.limits.max_seconds},
                   {"merge_duplicates", config.limits.merge_duplicates}};
    json boards = json::array();
    for (const auto& r : results) {
        json runs = json::array();
        for (const auto& g : r.runs)
            runs.push_back({{"seed", g.seed},
                            {"solved", g.solved},
                            {"moves", g.solved ? json(g.moves) : json(nullptr)},
                            {"optimal", g.optimal},
                            {"evaluations", g.evaluations},
                            {"evaluations_to_optimum", opt_json(g.evaluations_to_optimum)},
                            {"generations", g.generations},
                            {"best_fitness", g.best_fitness}});
        boards.push_back({{"board", r.board},
                          {"width", r.width},
                          {"height", r.height},
                          {"required", r.required},
                          {"status", to_string(r.status)},
                          {"optimal", opt_json(r.optimal)},
                          {"astar_evals", r.astar_evals},
                          {"astar_solutions", r.astar_solutions},
                          {"runs", std::move(runs)}});
    }
    j["boards"] = std::move(boards);

    json rows = json::array();
    for (const Row& r : summary.rows)
        rows.push_back({{"board", r.board},
                        {"status", to_string(r.status)},
                        {"optimal", opt_json(r.optimal)},
                        {"ga_best", opt_json(r.ga_best)},
                        {"ga_avg", opt_json(r.ga_avg)},
                        {"ga_excess_pct", opt_json(r.ga_excess_pct)},
                        {"astar_evals", r.astar_evals},
                        {"ga_avg_evals", opt_json(r.ga_avg_evals)},
                        {"eval_ratio_pct", opt_json(r.eval_ratio_pct)},
                        {"ga_solve_rate", r.ga_solve_rate},
                        {"solved_runs", r.solved_runs},
                        {"optimal_runs", r.optimal_runs}});
    j["rows"] = std::move(rows);
    j["aggregate"] = {{"mean_excess_pct", opt_json(summary.mean_excess_pct)},
                      {"mean_eval_ratio_pct", opt_json(summary.mean_eval_ratio_pct)},
                      {"median_eval_ratio_pct", opt_json(summary.median_eval_ratio_pct)}};
    return j;
}

std::string format_table(const Summary& summary) {
    std::string out = fmt::format("{:<18} {:>7} {:>7} {:>7} {:>9} {:>12} {:>10} {:>9} {:>7}\n", "board", "optimal",
                                  "GA best", "GA avg", "excess %", "A* evals", "GA evals", "% of A*", "solved");
    for (const Row& r : summary.rows) {
        const std::string optimal = r.status == BoardStatus::Solved ? opt(r.optimal) : std::string(to_string(r.status));
        out += fmt::format("{:<18} {:>7} {:>7} {:>7} {:>9} {:>12} {:>10} {:>9} {:>4}/{:<2}\n", r.board, optimal,
                           opt(r.ga_best), opt(r.ga_avg), opt(r.ga_excess_pct), r.astar_evals, opt(r.ga_avg_evals),
                           opt(r.eval_ratio_pct), r.solved_runs, r.runs);
    }
    out += fmt::format("{:<18} {:>7} {:>7} {:>7} {:>9} {:>12} {:>10} {:>9}\n", "average", "", "", "",
                       opt(summary.mean_excess_pct), "", "", opt(summary.mean_eval_ratio_pct));
    out += fmt::format("{:<18} {:>7} {:>7} {:>7} {:>9} {:>12} {:>10} {:>9}\n", "median", "", "", "", "", "", "",
                       opt(summary.median_eval_ratio_pct));
    return out;
}

}  // namespace zengarden::bench
