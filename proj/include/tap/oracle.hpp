#pragma once

#include <cstdint>

#include "tap/model.hpp"

namespace tap {

// Exhaustive enumeration would exceed the configured assignment budget.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    Assignment best_assignment;
    double best_fitness = 0.0;
    // Assignments tying the best fitness within 1e-12.
    std::uint64_t optima_count = 0;
};

// Enumerates all m^n assignments and returns the fitness-maximal one, ties
// broken by the lexicographically smallest target vector. Throws
// BudgetExceededError when m^n > limit (checked in exact integer arithmetic,
// overflow-safe); never samples.
OracleResult exhaustive_best(const ProblemInstance& instance, const FitnessWeights& weights,
                             const QueueThreshold& threshold, std::uint64_t limit = 2'000'000);

// Literal loop transcription of every metric, sharing no code with the model
// module. Verification reference only.
MetricsReport naive_evaluate(const ProblemInstance& instance, const Assignment& assignment,
                             const FitnessWeights& weights, const QueueThreshold& threshold);

} // namespace tap
