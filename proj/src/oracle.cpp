#include "tap/oracle.hpp"

#include <cmath>
#include <string>

namespace tap {

namespace {

// m^n if it does not exceed limit, otherwise nullopt; exact integers.
bool search_space_within(std::uint64_t m, int n, std::uint64_t limit, std::uint64_t& out) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > limit / m) return false;
        total *= m;
    }
    out = total;
    return true;
}

// Lexicographic odometer over target vectors; false once wrapped around.
bool advance(std::vector<int>& target, int num_processors) {
    for (int i = static_cast<int>(target.size()) - 1; i >= 0; --i) {
        if (++target[i] < num_processors) return true;
        target[i] = 0;
    }
    return false;
}

} // namespace

OracleResult exhaustive_best(const ProblemInstance& instance, const FitnessWeights& weights,
                             const QueueThreshold& threshold, std::uint64_t limit) {
    validate(instance);
    validate(weights);
    validate(threshold);
    std::uint64_t total = 0;
    if (!search_space_within(static_cast<std::uint64_t>(instance.num_processors),
                             instance.num_tasks, limit, total))
        throw BudgetExceededError("exhaustive search space m^n exceeds limit " +
                                  std::to_string(limit));

    OracleResult result;
    Assignment assignment;
    assignment.target.assign(instance.num_tasks, 0);
    bool first = true;
    do {
        const double f = fitness(instance, assignment, weights, threshold);
        if (first || f > result.best_fitness) {
            result.best_fitness = f;
            result.best_assignment = assignment;
            first = false;
        }
    } while (advance(assignment.target, instance.num_processors));

    assignment.target.assign(instance.num_tasks, 0);
    do {
        const double f = fitness(instance, assignment, weights, threshold);
        if (std::abs(f - result.best_fitness) <= 1e-12) ++result.optima_count;
    } while (advance(assignment.target, instance.num_processors));
    return result;
}

MetricsReport naive_evaluate(const ProblemInstance& instance, const Assignment& assignment,
                             const FitnessWeights& weights, const QueueThreshold& threshold) {
    validate(instance, assignment);
    validate(weights);
    validate(threshold);
    const int n = instance.num_tasks;
    const int m = instance.num_processors;
    MetricsReport report;

    report.per_processor_load.assign(m, 0.0);
    for (int p = 0; p < m; ++p) {
        report.per_processor_load[p] = instance.preexisting_load[p];
        for (int i = 0; i < n; ++i)
            if (assignment.target[i] == p)
                report.per_processor_load[p] += instance.exec_time(i, p);
    }

    report.makespan = report.per_processor_load[0];
    for (int p = 1; p < m; ++p)
        if (report.per_processor_load[p] > report.makespan)
            report.makespan = report.per_processor_load[p];

    report.comm_cost = 0.0;
    for (int i = 0; i < n; ++i)
        report.comm_cost += instance.comm_delay(instance.origin[i], assignment.target[i]) +
                            instance.comm_rate(instance.origin[i], assignment.target[i]) *
                                instance.data_volume[i];

    report.per_processor_utilization.assign(m, 0.0);
    for (int p = 0; p < m; ++p)
        report.per_processor_utilization[p] = report.per_processor_load[p] / report.makespan;

    report.ave_utilization = 0.0;
    for (int p = 0; p < m; ++p) report.ave_utilization += report.per_processor_utilization[p];
    report.ave_utilization /= m;

    double mean_load = 0.0;
    for (int p = 0; p < m; ++p) mean_load += report.per_processor_load[p];
    mean_load /= m;
    report.accepted_queues = 0;
    for (int p = 0; p < m; ++p)
        if (threshold.lower_factor * mean_load <= report.per_processor_load[p] &&
            report.per_processor_load[p] <= threshold.upper_factor * mean_load)
            ++report.accepted_queues;
    report.ave_accepted_queues = static_cast<double>(report.accepted_queues) / m;

    double guarded_cc = report.comm_cost;
    if (guarded_cc < weights.cc_epsilon) guarded_cc = weights.cc_epsilon;
    report.fitness = (weights.gamma * report.ave_utilization * weights.theta *
                      report.ave_accepted_queues) /
                     (weights.alpha * report.makespan * weights.beta * guarded_cc);
    return report;
}

} // namespace tap
