#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tap/encoding.hpp"
#include "tap/model.hpp"
#include "tap/rng.hpp"

namespace tap {

struct GAConfig {
    int population_size = 50;
    int generations = 100;
    double crossover_rate = 0.9;
    // Per-gene replacement probability; absent means 1/num_tasks, resolved at
    // run start.
    std::optional<double> mutation_rate;
    int tournament_size = 2;
    int elite_count = 2;
    std::uint64_t seed = 1;
};

void validate(const GAConfig& config);

// Output of one solver run. fitness_trace[g] is the best population fitness
// at generation g (index 0 = initial population); non-decreasing under
// elitism.
struct RunResult {
    Chromosome best_chromosome;
    MetricsReport best_report;
    std::vector<double> fitness_trace;
    std::uint64_t evaluations_used = 0;
};

std::vector<Chromosome> init_population(const ProblemInstance& instance, const GAConfig& config,
                                        RngStream& rng);

// Tournament selection: draw tournament_size distinct individuals uniformly,
// return the index of the fittest (first drawn wins ties).
int select(std::span<const double> fitnesses, int tournament_size, RngStream& rng);

// Single-point crossover at a uniform cut in [1, n-1], applied with
// probability crossover_rate; otherwise the children are copies. Length-1
// parents always copy.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& parent_a,
                                            const Chromosome& parent_b, double crossover_rate,
                                            RngStream& rng);

// Each gene independently replaced by a uniform random processor with
// probability mutation_rate.
Chromosome mutate(Chromosome chromosome, double mutation_rate, int num_processors,
                  RngStream& rng);

// One generation: copy the elite_count best unchanged, fill the remainder by
// select -> crossover -> mutate. Accepts elite_count up to population_size
// (all-elite degenerates to pure copying).
std::vector<Chromosome> ga_step(const std::vector<Chromosome>& population,
                                std::span<const double> fitnesses, const GAConfig& config,
                                double mutation_rate, int num_processors, RngStream& rng);

// Pure genetic algorithm: the comparison baseline.
RunResult run_ga(const ProblemInstance& instance, const FitnessWeights& weights,
                 const QueueThreshold& threshold, const GAConfig& config);

namespace detail {

// Post-mutation refinement phase; receives the freshly evaluated population
// and returns the extra fitness evaluations it consumed. May improve
// individuals in place but must never worsen one.
using LocalSearchHook = std::function<std::uint64_t(
    int generation, std::vector<Chromosome>& population, std::vector<MetricsReport>& reports)>;

// Generation loop shared by run_ga and run_memetic: evaluate, record trace,
// elitist step, optional refinement. An empty hook and stagnation_limit 0
// give the pure GA.
RunResult evolve(const ProblemInstance& instance, const FitnessWeights& weights,
                 const QueueThreshold& threshold, const GAConfig& config,
                 const LocalSearchHook& refine, int stagnation_limit);

// Indices of the population ranked by fitness, best first, ties by ascending
// index.
std::vector<int> rank_indices(std::span<const double> fitnesses);

// Deterministic single-point crossover at a fixed cut in [1, n-1].
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& parent_a,
                                               const Chromosome& parent_b, int cut);

} // namespace detail

} // namespace tap
