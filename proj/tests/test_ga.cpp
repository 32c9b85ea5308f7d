#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "zengarden/ga.hpp"

namespace zg = zengarden;
namespace ga = zengarden::ga;

namespace {

const zg::Board& two_by_two() {
    static const zg::Board b = zg::parse_board("zpg1\n..\n..");
    return b;
}

ga::Genome genome_with_entries(const zg::Board& board, std::vector<int> entries, int length = 20) {
    ga::Config cfg;
    cfg.gene_length = length;
    ga::Rng rng(99);
    ga::Genome g = ga::random_genome(board, cfg, rng);
    for (std::size_t i = 0; i < entries.size(); ++i) g.loci()[i * ga::kLociPerClause] = entries[i];
    return g;
}

ga::Config small_config() {
    ga::Config cfg;
    cfg.population_size = 40;
    cfg.generations = 5;
    cfg.gene_length = 6;
    return cfg;
}

}  // namespace

TEST(Fitness, SolvedInTwoMoves) {
    const auto g = genome_with_entries(two_by_two(), {1, 2});
    const auto e = ga::evaluate(two_by_two(), g);
    EXPECT_TRUE(e.solved);
    EXPECT_EQ(e.moves, 2);
    EXPECT_DOUBLE_EQ(e.fitness, 480.0);
}

TEST(Fitness, HalfRakedThenNothingValid) {
    std::vector<int> entries(20, 1);
    const auto g = genome_with_entries(two_by_two(), entries);
    const auto e = ga::evaluate(two_by_two(), g);
    EXPECT_EQ(e.moves, 1);
    EXPECT_DOUBLE_EQ(e.area, 0.5);
    EXPECT_DOUBLE_EQ(e.fitness, 290.0);
}

TEST(Fitness, DeadlockScoresZero) {
    const auto b = zg::parse_board("zpg1\n.#.\n..#\n.#.\n...");
    std::vector<int> entries(20, 2 * 3 + 4 + 3);  // west face of row 1
    const auto g = genome_with_entries(b, entries);
    const auto e = ga::evaluate(b, g);
    EXPECT_TRUE(e.deadlocked);
    EXPECT_DOUBLE_EQ(e.fitness, 0.0);
}

TEST(Fitness, BoundsOverRandomGenomes) {
    const auto b = zg::parse_board("zpg1\n.....\n.#.@.\n..1..\n.@..2\n3....");
    ga::Config cfg;
    ga::Rng rng(4);
    for (int i = 0; i < 3000; ++i) {
        const auto e = ga::evaluate(b, ga::random_genome(b, cfg, rng));
        ASSERT_GE(e.fitness, 0.0);
        ASSERT_LE(e.fitness, 500.0);
        if (e.deadlocked) ASSERT_EQ(e.fitness, 0.0);
        if (e.solved) ASSERT_GE(e.fitness, 300.0);
        if (!e.solved) ASSERT_LT(e.fitness, 400.0);
    }
}

TEST(Sampling, EntriesWithinCircumference) {
    ga::Config cfg;
    ga::Rng rng(1);
    const ga::LocusRanges ranges(two_by_two());
    EXPECT_EQ(ranges.max_entry, 8);
    for (int i = 0; i < 200; ++i) {
        const auto g = ga::random_genome(two_by_two(), cfg, rng);
        ASSERT_EQ(g.loci().size(), static_cast<std::size_t>(cfg.gene_length * ga::kLociPerClause));
        for (const auto& c : g.clauses()) {
            ASSERT_GE(c.entry, 1);
            ASSERT_LE(c.entry, 8);
            for (const auto& p : c.pairs) {
                ASSERT_EQ(p.push, 1);  // max(2, 2) - 2 floors to 1
                ASSERT_TRUE(p.choice == 1 || p.choice == 2);
            }
        }
        ASSERT_TRUE(ga::in_range(two_by_two(), g));
    }
}

TEST(Sampling, SameSeedSameGenome) {
    ga::Config cfg;
    ga::Rng a(77), b(77);
    EXPECT_EQ(ga::random_genome(two_by_two(), cfg, a), ga::random_genome(two_by_two(), cfg, b));
}

TEST(Sampling, EveryFaceAppears) {
    const auto b = zg::parse_board("zpg1\n....\n....\n....\n....");
    ga::Config cfg;
    cfg.gene_length = 1;
    ga::Rng rng(3);
    std::set<int> seen;
    for (int i = 0; i < 10'000; ++i) seen.insert(ga::random_genome(b, cfg, rng).clause(0).entry);
    EXPECT_EQ(seen.size(), 16u);
    EXPECT_EQ(*seen.begin(), 1);
    EXPECT_EQ(*seen.rbegin(), 16);
}

TEST(Sampling, PushRangeFollowsTheLongerSide) {
    const auto b = zg::parse_board("zpg1\n......\n......");
    const ga::LocusRanges r(b);
    EXPECT_EQ(r.max_push, 4);
    EXPECT_EQ(r.upper(0), 12 + 4);
    EXPECT_EQ(r.upper(1), 4);
    EXPECT_EQ(r.upper(2), 2);
    EXPECT_TRUE(r.contains(1, 4));
    EXPECT_FALSE(r.contains(1, 5));
    EXPECT_FALSE(r.contains(2, 0));
}

TEST(Evolve, IdenticalParentsWithoutMutation) {
    ga::Config cfg = small_config();
    cfg.mutation_rate = 0.0;
    cfg.selection_fraction = 1.0;
    ga::Rng rng(8);
    const auto parent = ga::random_genome(two_by_two(), cfg, rng);
    const std::vector<ga::Genome> pop(static_cast<std::size_t>(cfg.population_size), parent);
    const std::vector<double> fits(pop.size(), 10.0);
    const auto next = ga::evolve_generation(two_by_two(), pop, fits, cfg, rng);
    ASSERT_EQ(next.size(), pop.size());
    for (const auto& g : next) EXPECT_EQ(g, parent);
}

TEST(Evolve, FullMutationStaysInRange) {
    const auto b = zg::parse_board("zpg1\n.....\n.@...\n.....");
    ga::Config cfg = small_config();
    cfg.mutation_rate = 1.0;
    ga::Rng rng(9);
    std::vector<ga::Genome> pop;
    std::vector<double> fits;
    for (int i = 0; i < cfg.population_size; ++i) {
        pop.push_back(ga::random_genome(b, cfg, rng));
        fits.push_back(ga::fitness(b, pop.back()));
    }
    const auto next = ga::evolve_generation(b, pop, fits, cfg, rng);
    ASSERT_EQ(next.size(), pop.size());
    for (const auto& g : next) {
        EXPECT_TRUE(ga::in_range(b, g));
        EXPECT_EQ(g.gene_length(), cfg.gene_length);
    }
}

TEST(Evolve, KeepsTheBest) {
    const auto b = zg::parse_board("zpg1\n.....\n.@...\n.....");
    ga::Config cfg = small_config();
    cfg.mutation_rate = 1.0;
    ga::Rng rng(10);
    std::vector<ga::Genome> pop;
    std::vector<double> fits;
    for (int i = 0; i < cfg.population_size; ++i) {
        pop.push_back(ga::random_genome(b, cfg, rng));
        fits.push_back(ga::fitness(b, pop.back()));
    }
    const auto best = std::max_element(fits.begin(), fits.end()) - fits.begin();
    const auto next = ga::evolve_generation(b, pop, fits, cfg, rng);
    EXPECT_NE(std::find(next.begin(), next.end(), pop[static_cast<std::size_t>(best)]), next.end());
}

TEST(Evolve, Deterministic) {
    const auto b = zg::parse_board("zpg1\n....\n.#..\n....");
    ga::Config cfg = small_config();
    const auto make = [&] {
        ga::Rng rng(12);
        std::vector<ga::Genome> pop;
        std::vector<double> fits;
        for (int i = 0; i < cfg.population_size; ++i) {
            pop.push_back(ga::random_genome(b, cfg, rng));
            fits.push_back(ga::fitness(b, pop.back()));
        }
        return ga::evolve_generation(b, pop, fits, cfg, rng);
    };
    EXPECT_EQ(make(), make());
}

TEST(Evolve, SizeMismatchThrows) {
    ga::Config cfg = small_config();
    ga::Rng rng(1);
    std::vector<ga::Genome> pop(static_cast<std::size_t>(cfg.population_size), ga::random_genome(two_by_two(), cfg, rng));
    std::vector<double> fits(pop.size() - 1, 0.0);
    EXPECT_THROW(ga::evolve_generation(two_by_two(), pop, fits, cfg, rng), std::invalid_argument);
}

TEST(Run, SolvesTwoByTwo) {
    ga::Config cfg;
    cfg.rng_seed = 7;
    const auto r = ga::run(two_by_two(), cfg, 2);
    EXPECT_TRUE(r.solved);
    ASSERT_TRUE(r.generation_of_first_optimum);
    EXPECT_LE(*r.generation_of_first_optimum, 5);
    EXPECT_EQ(r.fitness_evaluations % 1000, 0u);
    EXPECT_EQ(r.best.moves, 2);
    EXPECT_EQ(r.best_script.size(), 2u);
}

TEST(Run, UnsolvableNeverEarnsTheBonus) {
    const auto b = zg::parse_board("zpg1\n.#..\n#.#.\n.#..\n....");
    ga::Config cfg = small_config();
    cfg.generations = 20;
    const auto r = ga::run(b, cfg);
    EXPECT_FALSE(r.solved);
    EXPECT_EQ(r.generations_elapsed, 20);
    EXPECT_LT(r.best.fitness, 400.0);
    for (double f : r.best_fitness) EXPECT_LT(f, 400.0);
}

TEST(Run, ZeroGenerationsEvaluatesOnce) {
    ga::Config cfg = small_config();
    cfg.generations = 0;
    const auto r = ga::run(zg::parse_board("zpg1\n....\n.#..\n...."), cfg);
    EXPECT_EQ(r.fitness_evaluations, static_cast<std::uint64_t>(cfg.population_size));
    EXPECT_EQ(r.best_fitness.size(), 1u);
    EXPECT_EQ(r.generations_elapsed, 0);
}

TEST(Run, SameSeedSameReport) {
    const auto b = zg::parse_board("zpg1\n.....\n.1.@.\n...2.");
    ga::Config cfg = small_config();
    cfg.rng_seed = 5;
    const auto a = ga::run(b, cfg);
    const auto c = ga::run(b, cfg);
    EXPECT_EQ(a.best_genome, c.best_genome);
    EXPECT_EQ(a.best_fitness, c.best_fitness);
    EXPECT_EQ(a.fitness_evaluations, c.fitness_evaluations);
}

TEST(Config, ParsesKeysAndComments) {
    std::istringstream in("# tuning\npopulation_size = 200\ngenerations=10 ; short run\nmutation_rate = 0.1\nrng_seed = 42\n");
    const auto cfg = ga::parse_config(in);
    EXPECT_EQ(cfg.population_size, 200);
    EXPECT_EQ(cfg.generations, 10);
    EXPECT_DOUBLE_EQ(cfg.mutation_rate, 0.1);
    EXPECT_EQ(cfg.rng_seed, 42u);
    EXPECT_EQ(cfg.gene_length, 20);
}

TEST(Config, RejectsBadInput) {
    std::istringstream unknown("colour = red\n");
    EXPECT_THROW(ga::parse_config(unknown), std::invalid_argument);
    std::istringstream bad("mutation_rate = 2\n");
    EXPECT_THROW(ga::parse_config(bad), std::invalid_argument);
    ga::Config cfg;
    cfg.population_size = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.selection_fraction = 0.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}
