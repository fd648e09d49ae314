#include "tap/memetic.hpp"

#include <chrono>
#include <cmath>

namespace tap {

void validate(const MemeticConfig& config) {
    validate(config.ga);
    validate(config.pso);
    if (!(config.local_search_fraction > 0.0) || config.local_search_fraction > 1.0)
        throw ValidationError("local_search_fraction must lie in (0, 1]");
    if (config.stagnation_limit < 0) throw ValidationError("stagnation_limit must be >= 0");
}

RunResult run_memetic(const ProblemInstance& instance, const FitnessWeights& weights,
                      const QueueThreshold& threshold, const MemeticConfig& config) {
    validate(config);
    const int refine_count = static_cast<int>(
        std::ceil(config.local_search_fraction * config.ga.population_size));

    detail::LocalSearchHook refine;
    if (config.pso.iterations > 0) {
        // Each call gets its own stream derived from (generation, rank), so
        // refinement never draws from the GA's stream and calls are
        // order-independent.
        refine = [&, refine_count](int generation, std::vector<Chromosome>& population,
                                   std::vector<MetricsReport>& reports) -> std::uint64_t {
            std::vector<double> fitnesses(reports.size());
            for (std::size_t i = 0; i < reports.size(); ++i) fitnesses[i] = reports[i].fitness;
            const auto ranked = detail::rank_indices(fitnesses);
            std::uint64_t used = 0;
            for (int rank = 0; rank < refine_count; ++rank) {
                const int i = ranked[rank];
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(generation) << 32) | static_cast<std::uint32_t>(rank);
                RngStream stream(derive_seed(config.ga.seed, key));
                LocalSearchResult res = local_search(population[i], instance, weights,
                                                     threshold, config.pso, stream);
                used += res.evaluations;
                if (res.improved) {
                    population[i] = std::move(res.chromosome);
                    reports[i] = std::move(res.report);
                }
            }
            return used;
        };
    }
    return detail::evolve(instance, weights, threshold, config.ga, refine,
                          config.stagnation_limit);
}

std::string to_string(BudgetMode mode) {
    return mode == BudgetMode::EqualGenerations ? "generations" : "evaluations";
}

BudgetMode budget_mode_from_string(const std::string& name) {
    if (name == "generations") return BudgetMode::EqualGenerations;
    if (name == "evaluations") return BudgetMode::EqualEvaluations;
    throw ValidationError("unknown budget mode: " + name);
}

ComparisonRecord compare(const ProblemInstance& instance, const FitnessWeights& weights,
                         const QueueThreshold& threshold, const MemeticConfig& memetic_config,
                         const GAConfig& ga_config, BudgetMode mode) {
    validate(instance);
    validate(memetic_config);
    validate(ga_config);

    using clock = std::chrono::steady_clock;
    ComparisonRecord record;
    record.budget_mode = mode;

    auto t0 = clock::now();
    record.memetic = run_memetic(instance, weights, threshold, memetic_config);
    record.memetic_wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

    GAConfig ga = ga_config;
    if (mode == BudgetMode::EqualGenerations) {
        ga.generations = memetic_config.ga.generations;
        record.declared_budget = static_cast<std::uint64_t>(ga.generations);
    } else {
        const std::uint64_t budget = record.memetic.evaluations_used;
        const std::uint64_t pop = static_cast<std::uint64_t>(ga.population_size);
        ga.generations = static_cast<int>((budget + pop - 1) / pop) - 1;
        if (ga.generations < 0) ga.generations = 0;
        record.declared_budget = budget;
    }
    record.ga_generations = ga.generations;

    t0 = clock::now();
    record.ga = run_ga(instance, weights, threshold, ga);
    record.ga_wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return record;
}

} // namespace tap
