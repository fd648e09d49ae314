#pragma once

#include <cstdint>
#include <string>

#include "tap/ga.hpp"
#include "tap/pso.hpp"

namespace tap {

// The proposed solver: the GA loop with PSO refinement of the
// ceil(local_search_fraction * population) best individuals each generation.
struct MemeticConfig {
    GAConfig ga{};
    PSOConfig pso{};
    double local_search_fraction = 0.1;
    // Generations without best-fitness improvement before an early stop;
    // 0 disables.
    int stagnation_limit = 0;
};

void validate(const MemeticConfig& config);

RunResult run_memetic(const ProblemInstance& instance, const FitnessWeights& weights,
                      const QueueThreshold& threshold, const MemeticConfig& config);

enum class BudgetMode {
    EqualGenerations,
    EqualEvaluations,
};

std::string to_string(BudgetMode mode);
BudgetMode budget_mode_from_string(const std::string& name);

// Both solvers on one instance under budget parity. Under EqualEvaluations
// the memetic runs first and the GA generation count is raised to
// ceil(E/P) - 1 so the GA receives at least the memetic's evaluation budget.
struct ComparisonRecord {
    BudgetMode budget_mode = BudgetMode::EqualGenerations;
    std::uint64_t declared_budget = 0;
    RunResult memetic;
    RunResult ga;
    int ga_generations = 0; // effective GA generation count after parity
    double memetic_wall_ms = 0.0;
    double ga_wall_ms = 0.0;
};

ComparisonRecord compare(const ProblemInstance& instance, const FitnessWeights& weights,
                         const QueueThreshold& threshold, const MemeticConfig& memetic_config,
                         const GAConfig& ga_config, BudgetMode mode);

} // namespace tap
