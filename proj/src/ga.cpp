#include "tap/ga.hpp"

#include <algorithm>
#include <numeric>

namespace tap {

void validate(const GAConfig& config) {
    if (config.population_size < 1) throw ValidationError("population_size must be >= 1");
    if (config.generations < 0) throw ValidationError("generations must be >= 0");
    if (config.crossover_rate < 0.0 || config.crossover_rate > 1.0)
        throw ValidationError("crossover_rate must lie in [0, 1]");
    if (config.mutation_rate &&
        (*config.mutation_rate < 0.0 || *config.mutation_rate > 1.0))
        throw ValidationError("mutation_rate must lie in [0, 1]");
    if (config.tournament_size < 2) throw ValidationError("tournament_size must be >= 2");
    if (config.tournament_size > config.population_size)
        throw ValidationError("tournament_size must not exceed population_size");
    if (config.elite_count < 1) throw ValidationError("elite_count must be >= 1");
    if (config.elite_count >= config.population_size)
        throw ValidationError("elite_count must be less than population_size");
}

std::vector<Chromosome> init_population(const ProblemInstance& instance, const GAConfig& config,
                                        RngStream& rng) {
    validate(instance);
    validate(config);
    std::vector<Chromosome> population;
    population.reserve(config.population_size);
    for (int i = 0; i < config.population_size; ++i)
        population.push_back(
            random_chromosome(instance.num_tasks, instance.num_processors, rng));
    return population;
}

int select(std::span<const double> fitnesses, int tournament_size, RngStream& rng) {
    const int n = static_cast<int>(fitnesses.size());
    // Partial Fisher-Yates draw of tournament_size distinct indices.
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    int best = -1;
    for (int t = 0; t < tournament_size; ++t) {
        const int j = rng.uniform_int(t, n - 1);
        std::swap(pool[t], pool[j]);
        const int candidate = pool[t];
        if (best < 0 || fitnesses[candidate] > fitnesses[best]) best = candidate;
    }
    return best;
}

namespace detail {

std::vector<int> rank_indices(std::span<const double> fitnesses) {
    std::vector<int> idx(fitnesses.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return fitnesses[a] > fitnesses[b]; });
    return idx;
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& parent_a,
                                               const Chromosome& parent_b, int cut) {
    const std::size_t n = parent_a.genes.size();
    Chromosome child_a = parent_a;
    Chromosome child_b = parent_b;
    for (std::size_t i = static_cast<std::size_t>(cut); i < n; ++i)
        std::swap(child_a.genes[i], child_b.genes[i]);
    return {std::move(child_a), std::move(child_b)};
}

} // namespace detail

std::pair<Chromosome, Chromosome> crossover(const Chromosome& parent_a,
                                            const Chromosome& parent_b, double crossover_rate,
                                            RngStream& rng) {
    if (parent_a.genes.size() != parent_b.genes.size())
        throw ValidationError("crossover parents must have equal length");
    const int n = static_cast<int>(parent_a.genes.size());
    if (rng.uniform01() < crossover_rate && n >= 2) {
        const int cut = rng.uniform_int(1, n - 1);
        return detail::crossover_at(parent_a, parent_b, cut);
    }
    return {parent_a, parent_b};
}

Chromosome mutate(Chromosome chromosome, double mutation_rate, int num_processors,
                  RngStream& rng) {
    for (int& gene : chromosome.genes)
        if (rng.uniform01() < mutation_rate) gene = rng.uniform_int(0, num_processors - 1);
    return chromosome;
}

std::vector<Chromosome> ga_step(const std::vector<Chromosome>& population,
                                std::span<const double> fitnesses, const GAConfig& config,
                                double mutation_rate, int num_processors, RngStream& rng) {
    const int pop_size = static_cast<int>(population.size());
    const auto ranked = detail::rank_indices(fitnesses);
    std::vector<Chromosome> next;
    next.reserve(pop_size);
    const int elites = std::min(config.elite_count, pop_size);
    for (int e = 0; e < elites; ++e) next.push_back(population[ranked[e]]);
    while (static_cast<int>(next.size()) < pop_size) {
        const int a = select(fitnesses, config.tournament_size, rng);
        const int b = select(fitnesses, config.tournament_size, rng);
        auto [child_a, child_b] =
            crossover(population[a], population[b], config.crossover_rate, rng);
        next.push_back(mutate(std::move(child_a), mutation_rate, num_processors, rng));
        if (static_cast<int>(next.size()) < pop_size)
            next.push_back(mutate(std::move(child_b), mutation_rate, num_processors, rng));
    }
    return next;
}

namespace detail {

RunResult evolve(const ProblemInstance& instance, const FitnessWeights& weights,
                 const QueueThreshold& threshold, const GAConfig& config,
                 const LocalSearchHook& refine, int stagnation_limit) {
    validate(instance);
    validate(config);
    validate(weights);
    validate(threshold);
    const double mutation_rate = config.mutation_rate.value_or(1.0 / instance.num_tasks);

    RngStream rng(config.seed);
    std::vector<Chromosome> population = init_population(instance, config, rng);

    std::vector<MetricsReport> reports(population.size());
    std::vector<double> fitnesses(population.size());
    std::uint64_t evaluations = 0;
    auto evaluate_population = [&] {
        for (std::size_t i = 0; i < population.size(); ++i) {
            reports[i] = evaluate(instance, Assignment{population[i].genes}, weights, threshold);
            fitnesses[i] = reports[i].fitness;
        }
        evaluations += population.size();
    };
    auto best_index = [&] {
        return static_cast<std::size_t>(
            std::max_element(fitnesses.begin(), fitnesses.end()) - fitnesses.begin());
    };

    RunResult result;
    evaluate_population();
    std::size_t bi = best_index();
    result.best_chromosome = population[bi];
    result.best_report = reports[bi];
    result.fitness_trace.push_back(fitnesses[bi]);

    int stagnant = 0;
    for (int g = 1; g <= config.generations; ++g) {
        population = ga_step(population, fitnesses, config, mutation_rate,
                             instance.num_processors, rng);
        evaluate_population();
        if (refine) {
            evaluations += refine(g, population, reports);
            for (std::size_t i = 0; i < population.size(); ++i)
                fitnesses[i] = reports[i].fitness;
        }
        bi = best_index();
        result.fitness_trace.push_back(fitnesses[bi]);
        if (fitnesses[bi] > result.best_report.fitness) {
            result.best_chromosome = population[bi];
            result.best_report = reports[bi];
            stagnant = 0;
        } else {
            ++stagnant;
        }
        if (stagnation_limit > 0 && stagnant >= stagnation_limit) break;
    }
    result.evaluations_used = evaluations;
    return result;
}

} // namespace detail

RunResult run_ga(const ProblemInstance& instance, const FitnessWeights& weights,
                 const QueueThreshold& threshold, const GAConfig& config) {
    return detail::evolve(instance, weights, threshold, config, nullptr, 0);
}

} // namespace tap
