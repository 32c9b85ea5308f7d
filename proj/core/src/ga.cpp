#include "zengarden/ga.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zengarden::ga {

// ---------------------------------------------------------------- config

void Config::validate() const {
    if (population_size < 2) throw std::invalid_argument("population_size must be at least 2");
    if (generations < 0) throw std::invalid_argument("generations must be non-negative");
    if (gene_length < 1) throw std::invalid_argument("gene_length must be positive");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw std::invalid_argument("mutation_rate must lie in [0, 1]");
    if (!(selection_fraction > 0.0 && selection_fraction <= 1.0))
        throw std::invalid_argument("selection_fraction must lie in (0, 1]");
}

Config parse_config(std::istream& in, Config base) {
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find_first_of("#;"); hash != std::string::npos) raw.erase(hash);
        const auto eq = raw.find('=');
        std::istringstream whole(raw);
        std::string probe;
        if (!(whole >> probe)) continue;
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(line_no) + ": missing '='");

        std::string key, value, extra;
        std::istringstream(raw.substr(0, eq)) >> key;
        std::istringstream vs(raw.substr(eq + 1));
        vs >> value;
        if (key.empty() || value.empty() || (vs >> extra))
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected 'key = value'");

        const auto bad = [&] {
            return std::invalid_argument("config line " + std::to_string(line_no) + ": bad value for " + key);
        };
        try {
            std::size_t used = 0;
            if (key == "population_size") {
                base.population_size = std::stoi(value, &used);
            } else if (key == "generations") {
                base.generations = std::stoi(value, &used);
            } else if (key == "gene_length") {
                base.gene_length = std::stoi(value, &used);
            } else if (key == "mutation_rate") {
                base.mutation_rate = std::stod(value, &used);
            } else if (key == "selection_fraction") {
                base.selection_fraction = std::stod(value, &used);
            } else if (key == "rng_seed") {
                base.rng_seed = std::stoull(value, &used);
            } else {
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            }
            if (used != value.size()) throw bad();
        } catch (const std::out_of_range&) {
            throw bad();
        } catch (const std::invalid_argument& e) {
            if (std::string_view(e.what()).starts_with("config line")) throw;
            throw bad();
        }
    }
    base.validate();
    return base;
}

Config load_config(const std::filesystem::path& path, Config base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    return parse_config(in, base);
}

// ---------------------------------------------------------------- genome

LocusRanges::LocusRanges(const Board& board)
    : max_entry(board.circumference()), max_push(std::max(1, std::max(board.width(), board.height()) - 2)) {}

int LocusRanges::upper(int locus) const {
    const int within = locus % kLociPerClause;
    if (within == 0) return max_entry;
    return within % 2 == 1 ? max_push : 2;
}

Genome::Genome(int gene_length, std::vector<int> loci) : gene_length_(gene_length), loci_(std::move(loci)) {
    if (loci_.size() != static_cast<std::size_t>(gene_length_ * kLociPerClause))
        throw std::invalid_argument("genome length does not match gene_length");
}

Clause Genome::clause(int i) const {
    const auto base = static_cast<std::size_t>(i * kLociPerClause);
    Clause c;
    c.entry = loci_[base];
    for (std::size_t j = 0; j < static_cast<std::size_t>(kClausePairs); ++j)
        c.pairs[j] = {loci_[base + 1 + 2 * j], loci_[base + 2 + 2 * j]};
    return c;
}

std::vector<Clause> Genome::clauses() const {
    std::vector<Clause> out;
    out.reserve(static_cast<std::size_t>(gene_length_));
    for (int i = 0; i < gene_length_; ++i) out.push_back(clause(i));
    return out;
}

namespace {

int sample_locus(const LocusRanges& ranges, int locus, Rng& rng) {
    return std::uniform_int_distribution<int>(1, ranges.upper(locus))(rng);
}

}  // namespace

Genome random_genome(const Board& board, const Config& config, Rng& rng) {
    const LocusRanges ranges(board);
    std::vector<int> loci(static_cast<std::size_t>(config.gene_length * kLociPerClause));
    for (std::size_t i = 0; i < loci.size(); ++i) loci[i] = sample_locus(ranges, static_cast<int>(i), rng);
    return Genome(config.gene_length, std::move(loci));
}

bool in_range(const Board& board, const Genome& genome) {
    const LocusRanges ranges(board);
    const auto loci = genome.loci();
    for (std::size_t i = 0; i < loci.size(); ++i)
        if (!ranges.contains(static_cast<int>(i), loci[i])) return false;
    return true;
}

// ---------------------------------------------------------------- fitness

Evaluation evaluate(const Board& board, const Genome& genome) {
    GameState state(board);
    for (int i = 0; i < genome.gene_length(); ++i) {
        if (state.deadlocked() || is_solved(state)) break;
        execute_move(state, genome.clause(i), false);
    }

    Evaluation e;
    e.moves = state.moves_done();
    e.area = area_fitness(state);
    e.solved = is_solved(state);
    e.deadlocked = state.deadlocked();

    const double m = genome.gene_length();
    const double base = (m - e.moves) * (200.0 / m);
    if (e.deadlocked)
        e.fitness = 0.0;
    else if (e.area > 0.0)
        e.fitness = base + (1.0 - e.area) * 200.0;
    else if (e.solved)
        e.fitness = base + 300.0;
    else
        e.fitness = 0.0;
    return e;
}

double fitness(const Board& board, const Genome& genome) { return evaluate(board, genome).fitness; }

// ---------------------------------------------------------------- evolution

std::vector<Genome> evolve_generation(const Board& board, std::span<const Genome> population,
                                      std::span<const double> fitnesses, const Config& config, Rng& rng) {
    if (population.size() != fitnesses.size())
        throw std::invalid_argument("population and fitness lengths differ");
    if (population.size() != static_cast<std::size_t>(config.population_size))
        throw std::invalid_argument("population size differs from config.population_size");

    const std::size_t n = population.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fitnesses[a] > fitnesses[b]; });

    const auto pool = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::ceil(config.selection_fraction * static_cast<double>(n) - 1e-9)), 1, n);
    std::vector<double> weights(pool);
    for (std::size_t r = 0; r < pool; ++r) weights[r] = static_cast<double>(n - r);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

    const LocusRanges ranges(board);
    const int length = config.gene_length * kLociPerClause;
    std::uniform_int_distribution<int> cut(1, length - 1);
    std::bernoulli_distribution mutate(config.mutation_rate);

    std::vector<Genome> next;
    next.reserve(n);
    next.push_back(population[order.front()]);
    while (next.size() < n) {
        const Genome& a = population[order[pick(rng)]];
        const Genome& b = population[order[pick(rng)]];
        const int point = cut(rng);

        std::vector<int> loci(a.loci().begin(), a.loci().begin() + point);
        loci.insert(loci.end(), b.loci().begin() + point, b.loci().end());
        for (int i = 0; i < length; ++i)
            if (mutate(rng)) loci[static_cast<std::size_t>(i)] = sample_locus(ranges, i, rng);
        next.emplace_back(config.gene_length, std::move(loci));
    }
    return next;
}

namespace {

std::vector<Clause> completed_clauses(const Board& board, const Genome& genome) {
    std::vector<Clause> script;
    GameState state(board);
    for (int i = 0; i < genome.gene_length(); ++i) {
        if (state.deadlocked() || is_solved(state)) break;
        const Clause c = genome.clause(i);
        if (execute_move(state, c, false).result == MoveResult::Completed) script.push_back(c);
    }
    return script;
}

}  // namespace

Report run(const Board& board, const Config& config, std::optional<int> target_length) {
    config.validate();
    Rng rng(config.rng_seed);
    Report report;

    std::vector<Genome> population;
    population.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i) population.push_back(random_genome(board, config, rng));

    std::vector<double> fitnesses(population.size());
    bool have_best = false;
    for (int generation = 0;; ++generation) {
        double generation_best = -1.0;
        bool reached_target = false;
        for (std::size_t i = 0; i < population.size(); ++i) {
            const Evaluation e = evaluate(board, population[i]);
            fitnesses[i] = e.fitness;
            generation_best = std::max(generation_best, e.fitness);

            // A solved genome beats any unsolved one; otherwise higher fitness wins.
            const bool better = !have_best || (e.solved && !report.best.solved) ||
                                (e.solved == report.best.solved && e.fitness > report.best.fitness);
            if (better) {
                report.best = e;
                report.best_genome = population[i];
                have_best = true;
            }
            if (target_length && e.solved && e.moves <= *target_length) reached_target = true;
        }
        report.fitness_evaluations += population.size();
        report.best_fitness.push_back(generation_best);
        report.generations_elapsed = generation;

        if (reached_target) {
            report.generation_of_first_optimum = generation;
            report.evaluations_to_optimum = report.fitness_evaluations;
            break;
        }
        if (generation == config.generations) break;
        population = evolve_generation(board, population, fitnesses, config, rng);
    }

    report.solved = report.best.solved;
    report.best_script = completed_clauses(board, report.best_genome);
    return report;
}

}  // namespace zengarden::ga
