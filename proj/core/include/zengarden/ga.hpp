#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "zengarden/board.hpp"
#include "zengarden/engine.hpp"

namespace zengarden::ga {

using Rng = std::mt19937_64;

/// Integers per clause in the flattened chromosome: c, then eight (p, d) pairs.
constexpr int kLociPerClause = 1 + 2 * kClausePairs;

struct Config {
    int population_size = 1000;
    int generations = 100;
    int gene_length = 20;
    double mutation_rate = 0.07;
    double selection_fraction = 0.95;
    std::uint64_t rng_seed = 1;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// key = value lines; '#' and ';' start comments. Unknown keys are errors.
Config parse_config(std::istream& in, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});

/// Legal sampling range of every locus for one board; every lower bound is 1.
struct LocusRanges {
    int max_entry = 1;  // C
    int max_push = 1;   // max(x, y) - 2, at least 1

    explicit LocusRanges(const Board& board);

    int upper(int locus) const;
    bool contains(int locus, int value) const { return value >= 1 && value <= upper(locus); }
};

/// Fixed-length chromosome of gene_length clauses, stored flat.
class Genome {
public:
    Genome() = default;
    Genome(int gene_length, std::vector<int> loci);

    int gene_length() const { return gene_length_; }
    std::span<const int> loci() const { return loci_; }
    std::span<int> loci() { return loci_; }

    Clause clause(int i) const;
    std::vector<Clause> clauses() const;

    friend bool operator==(const Genome&, const Genome&) = default;

private:
    int gene_length_ = 0;
    std::vector<int> loci_;
};

Genome random_genome(const Board& board, const Config& config, Rng& rng);
bool in_range(const Board& board, const Genome& genome);

struct Evaluation {
    double fitness = 0.0;
    int moves = 0;
    double area = 1.0;
    bool solved = false;
    bool deadlocked = false;
};

/// Plays the genome from a fresh garden and scores it in [0, 500]:
/// (m - M) * (200 / m), plus (1 - area) * 200 while unraked squares remain,
/// or plus 300 for a full solution; a script that ends without both (which
/// includes every deadlock) scores 0.
Evaluation evaluate(const Board& board, const Genome& genome);
double fitness(const Board& board, const Genome& genome);

/// Rank-based replacement: elitist copy of the best, then children of
/// rank-weighted parents drawn from the top selection_fraction, one-point
/// crossover over the flat loci, per-locus resampling mutation.
std::vector<Genome> evolve_generation(const Board& board, std::span<const Genome> population,
                                      std::span<const double> fitnesses, const Config& config, Rng& rng);

struct Report {
    std::vector<double> best_fitness;  // per evaluated generation, initial population first
    Genome best_genome;
    Evaluation best;
    std::vector<Clause> best_script;  // completed clauses of the best genome, in order
    bool solved = false;
    std::uint64_t fitness_evaluations = 0;
    int generations_elapsed = 0;
    std::optional<int> generation_of_first_optimum;
    std::optional<std::uint64_t> evaluations_to_optimum;
};

/// Runs the generational loop. With a target length, stops as soon as a
/// genome solves the garden in at most that many moves.
Report run(const Board& board, const Config& config, std::optional<int> target_length = std::nullopt);

}  // namespace zengarden::ga
