#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tap/generator.hpp"
#include "tap/memetic.hpp"

namespace tap {

enum class ExperimentKind {
    VaryTasks,
    VaryPopulation,
    VaryGenerations,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

// Default sweep for a kind: tasks 20..200 step 20, population 20..100 step
// 20, generations 50..500 step 50.
std::vector<int> default_sweep(ExperimentKind kind);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::VaryTasks;
    std::vector<int> sweep;
    int repetitions = 20;
    GeneratorSpec generator{};
    MemeticConfig memetic{};
    GAConfig ga{};
    FitnessWeights weights{};
    QueueThreshold threshold{};
    BudgetMode budget = BudgetMode::EqualEvaluations;
    std::uint64_t seed = 1;
};

void validate(const ExperimentSpec& spec);

// One detail row per (sweep value, repetition, solver). The seed column alone
// reproduces the row: it seeds the instance generator and both solvers.
struct ExperimentRow {
    std::string experiment;
    std::string sweep_param;
    int sweep_value = 0;
    int repetition = 0; // 1-based
    std::uint64_t seed = 0;
    std::string solver; // "memetic" or "ga"
    double best_fitness = 0.0;
    double makespan = 0.0;
    double ave_utilization = 0.0;
    double comm_cost = 0.0;
    double ave_accepted_queues = 0.0;
    std::uint64_t evaluations_used = 0;
    double wall_time_ms = 0.0;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

// Fixed column order; metric values at shortest round-trip precision so
// reruns are byte-identical except the wall_time_ms column.
void write_detail_csv(const ExperimentResult& result, std::ostream& out);

// Per (sweep value, solver) means and sample standard deviations.
void write_summary_csv(const ExperimentResult& result, std::ostream& out);

// Runs the experiment and writes detail.csv and summary.csv under out_dir.
ExperimentResult run_experiment_to_dir(const ExperimentSpec& spec,
                                       const std::filesystem::path& out_dir);

} // namespace tap
