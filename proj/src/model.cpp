#include "tap/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tap {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw ValidationError("matrix rows have unequal lengths");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

namespace {

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

void check_comm_matrix(const Matrix& m, int num_processors, const char* name) {
    if (m.rows() != num_processors || m.cols() != num_processors)
        throw ValidationError(std::string(name) + " must be m x m");
    for (int u = 0; u < num_processors; ++u) {
        for (int v = 0; v < num_processors; ++v) {
            const double x = m(u, v);
            if (!std::isfinite(x) || x < 0.0)
                throw ValidationError(std::string(name) + " entries must be finite and >= 0");
            if (u == v && x != 0.0)
                throw ValidationError(std::string(name) + " must have a zero diagonal");
        }
    }
}

} // namespace

void validate(const ProblemInstance& instance) {
    if (instance.num_tasks < 1) throw ValidationError("num_tasks must be >= 1");
    if (instance.num_processors < 1) throw ValidationError("num_processors must be >= 1");
    const int n = instance.num_tasks;
    const int m = instance.num_processors;
    if (instance.exec_time.rows() != n || instance.exec_time.cols() != m)
        throw ValidationError("exec_time must be n x m");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const double a = instance.exec_time(i, j);
            if (!std::isfinite(a) || a <= 0.0)
                throw ValidationError("exec_time entries must be finite and > 0");
        }
    check_comm_matrix(instance.comm_delay, m, "comm_delay");
    check_comm_matrix(instance.comm_rate, m, "comm_rate");
    if (static_cast<int>(instance.data_volume.size()) != n)
        throw ValidationError("data_volume must have length n");
    if (!all_finite(instance.data_volume) ||
        std::any_of(instance.data_volume.begin(), instance.data_volume.end(),
                    [](double d) { return d < 0.0; }))
        throw ValidationError("data_volume entries must be finite and >= 0");
    if (static_cast<int>(instance.origin.size()) != n)
        throw ValidationError("origin must have length n");
    for (int c : instance.origin)
        if (c < 0 || c >= m) throw ValidationError("origin index out of processor range");
    if (static_cast<int>(instance.preexisting_load.size()) != m)
        throw ValidationError("preexisting_load must have length m");
    if (!all_finite(instance.preexisting_load) ||
        std::any_of(instance.preexisting_load.begin(), instance.preexisting_load.end(),
                    [](double l) { return l < 0.0; }))
        throw ValidationError("preexisting_load entries must be finite and >= 0");
}

void validate(const ProblemInstance& instance, const Assignment& assignment) {
    validate(instance);
    if (static_cast<int>(assignment.target.size()) != instance.num_tasks)
        throw ValidationError("assignment length must equal num_tasks");
    for (int f : assignment.target)
        if (f < 0 || f >= instance.num_processors)
            throw ValidationError("assignment target out of processor range");
}

void validate(const FitnessWeights& weights) {
    for (double w : {weights.alpha, weights.beta, weights.gamma, weights.theta})
        if (!(w > 0.0) || w > 1.0)
            throw ValidationError("fitness weights must lie in (0, 1]");
    if (!(weights.cc_epsilon > 0.0))
        throw ValidationError("cc_epsilon must be > 0");
}

void validate(const QueueThreshold& threshold) {
    if (!(threshold.lower_factor > 0.0) || !(threshold.lower_factor < threshold.upper_factor))
        throw ValidationError("queue threshold requires 0 < lower_factor < upper_factor");
}

namespace {

std::vector<double> compute_loads(const ProblemInstance& instance, const Assignment& assignment) {
    std::vector<double> loads = instance.preexisting_load;
    for (int i = 0; i < instance.num_tasks; ++i) {
        const int p = assignment.target[i];
        loads[p] += instance.exec_time(i, p);
    }
    return loads;
}

} // namespace

double load(const ProblemInstance& instance, const Assignment& assignment, int processor) {
    validate(instance, assignment);
    if (processor < 0 || processor >= instance.num_processors)
        throw ValidationError("processor index out of range");
    double sum = instance.preexisting_load[processor];
    for (int i = 0; i < instance.num_tasks; ++i)
        if (assignment.target[i] == processor) sum += instance.exec_time(i, processor);
    return sum;
}

double makespan(const ProblemInstance& instance, const Assignment& assignment) {
    validate(instance, assignment);
    const auto loads = compute_loads(instance, assignment);
    return *std::max_element(loads.begin(), loads.end());
}

double comm_cost(const ProblemInstance& instance, const Assignment& assignment) {
    validate(instance, assignment);
    double sum = 0.0;
    for (int i = 0; i < instance.num_tasks; ++i) {
        const int c = instance.origin[i];
        const int f = assignment.target[i];
        sum += instance.comm_delay(c, f) + instance.comm_rate(c, f) * instance.data_volume[i];
    }
    return sum;
}

double utilization(const ProblemInstance& instance, const Assignment& assignment, int processor) {
    validate(instance, assignment);
    if (processor < 0 || processor >= instance.num_processors)
        throw ValidationError("processor index out of range");
    const auto loads = compute_loads(instance, assignment);
    const double mk = *std::max_element(loads.begin(), loads.end());
    return loads[processor] / mk;
}

double ave_utilization(const ProblemInstance& instance, const Assignment& assignment) {
    validate(instance, assignment);
    const auto loads = compute_loads(instance, assignment);
    const double mk = *std::max_element(loads.begin(), loads.end());
    double sum = 0.0;
    for (double l : loads) sum += l / mk;
    return sum / instance.num_processors;
}

AcceptedQueues accepted_queues(const ProblemInstance& instance, const Assignment& assignment,
                               const QueueThreshold& threshold) {
    validate(instance, assignment);
    validate(threshold);
    const auto loads = compute_loads(instance, assignment);
    const double mean = std::accumulate(loads.begin(), loads.end(), 0.0) /
                        instance.num_processors;
    const double lo = threshold.lower_factor * mean;
    const double hi = threshold.upper_factor * mean;
    int count = 0;
    for (double l : loads)
        if (lo <= l && l <= hi) ++count;
    return {count, static_cast<double>(count) / instance.num_processors};
}

namespace detail {

double fitness_from_metrics(double makespan, double comm_cost, double ave_utilization,
                            double ave_accepted_queues, const FitnessWeights& weights) {
    const double guarded_cc = std::max(comm_cost, weights.cc_epsilon);
    return (weights.gamma * ave_utilization * weights.theta * ave_accepted_queues) /
           (weights.alpha * makespan * weights.beta * guarded_cc);
}

} // namespace detail

double fitness(const ProblemInstance& instance, const Assignment& assignment,
               const FitnessWeights& weights, const QueueThreshold& threshold) {
    return evaluate(instance, assignment, weights, threshold).fitness;
}

MetricsReport evaluate(const ProblemInstance& instance, const Assignment& assignment,
                       const FitnessWeights& weights, const QueueThreshold& threshold) {
    validate(instance, assignment);
    validate(weights);
    validate(threshold);
    MetricsReport report;
    report.per_processor_load = compute_loads(instance, assignment);
    report.makespan =
        *std::max_element(report.per_processor_load.begin(), report.per_processor_load.end());
    double cc = 0.0;
    for (int i = 0; i < instance.num_tasks; ++i) {
        const int c = instance.origin[i];
        const int f = assignment.target[i];
        cc += instance.comm_delay(c, f) + instance.comm_rate(c, f) * instance.data_volume[i];
    }
    report.comm_cost = cc;
    report.per_processor_utilization.resize(instance.num_processors);
    double util_sum = 0.0;
    for (int p = 0; p < instance.num_processors; ++p) {
        report.per_processor_utilization[p] = report.per_processor_load[p] / report.makespan;
        util_sum += report.per_processor_utilization[p];
    }
    report.ave_utilization = util_sum / instance.num_processors;
    const double mean = std::accumulate(report.per_processor_load.begin(),
                                        report.per_processor_load.end(), 0.0) /
                        instance.num_processors;
    const double lo = threshold.lower_factor * mean;
    const double hi = threshold.upper_factor * mean;
    int accepted = 0;
    for (double l : report.per_processor_load)
        if (lo <= l && l <= hi) ++accepted;
    report.accepted_queues = accepted;
    report.ave_accepted_queues = static_cast<double>(accepted) / instance.num_processors;
    report.fitness = detail::fitness_from_metrics(report.makespan, report.comm_cost,
                                                  report.ave_utilization,
                                                  report.ave_accepted_queues, weights);
    return report;
}

} // namespace tap
