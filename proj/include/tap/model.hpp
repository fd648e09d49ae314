#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tap {

// Thrown on malformed instances, assignments, or configurations.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::vector<std::vector<double>> to_rows() const;

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Static task assignment problem: n new tasks to place on m heterogeneous
// processors. Processor indices are 0-based throughout the API; file formats
// are 1-based (see instance_io).
struct ProblemInstance {
    int num_tasks = 0;                    // n
    int num_processors = 0;               // m
    Matrix exec_time;                     // n x m, a_ij > 0
    Matrix comm_delay;                    // m x m, r_uv >= 0, zero diagonal
    Matrix comm_rate;                     // m x m, h_uv >= 0, zero diagonal
    std::vector<double> data_volume;      // n, d_i >= 0
    std::vector<int> origin;              // n, c_i = processor the task resides on
    std::vector<double> preexisting_load; // m, summed exec time of resident tasks

    bool operator==(const ProblemInstance&) const = default;
};

// Solution vector: target[i] = processor chosen for task i.
struct Assignment {
    std::vector<int> target;

    bool operator==(const Assignment&) const = default;
};

// Control parameters of the fitness ratio. cc_epsilon guards the
// communication-cost factor in the denominator: a fully-local assignment has
// zero cost, so the guarded value max(comm_cost, cc_epsilon) is used.
struct FitnessWeights {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double theta = 1.0;
    double cc_epsilon = 1.0;
};

// Acceptance band for per-processor queues, as multiples of the mean load.
struct QueueThreshold {
    double lower_factor = 0.5;
    double upper_factor = 1.5;
};

// Every metric evaluated for one assignment.
struct MetricsReport {
    std::vector<double> per_processor_load;
    double makespan = 0.0;
    double comm_cost = 0.0;
    std::vector<double> per_processor_utilization;
    double ave_utilization = 0.0;
    int accepted_queues = 0;
    double ave_accepted_queues = 0.0;
    double fitness = 0.0;
};

void validate(const ProblemInstance& instance);
void validate(const ProblemInstance& instance, const Assignment& assignment);
void validate(const FitnessWeights& weights);
void validate(const QueueThreshold& threshold);

// Load on processor p: preexisting load plus exec times of tasks assigned to p.
double load(const ProblemInstance& instance, const Assignment& assignment, int processor);

// Maximum load over all processors.
double makespan(const ProblemInstance& instance, const Assignment& assignment);

// Total transfer cost: sum over tasks of r[c_i][f_i] + h[c_i][f_i] * d_i.
double comm_cost(const ProblemInstance& instance, const Assignment& assignment);

// load(p) / makespan, in [0, 1].
double utilization(const ProblemInstance& instance, const Assignment& assignment, int processor);

// Mean utilization over processors.
double ave_utilization(const ProblemInstance& instance, const Assignment& assignment);

struct AcceptedQueues {
    int count = 0;      // NoAPQ
    double average = 0; // NoAPQ / m
};

// A processor's queue is accepted iff its load lies within
// [lower_factor, upper_factor] times the mean per-processor load.
AcceptedQueues accepted_queues(const ProblemInstance& instance, const Assignment& assignment,
                               const QueueThreshold& threshold);

// (gamma*AveU * theta*AveNoAPQ) / (alpha*makespan * beta*max(CC, cc_epsilon)).
// Higher is better.
double fitness(const ProblemInstance& instance, const Assignment& assignment,
               const FitnessWeights& weights, const QueueThreshold& threshold);

// All metrics in one pass; fields are mutually consistent.
MetricsReport evaluate(const ProblemInstance& instance, const Assignment& assignment,
                       const FitnessWeights& weights, const QueueThreshold& threshold);

namespace detail {

// Fitness ratio from already-computed metrics; the single code path shared by
// fitness() and evaluate().
double fitness_from_metrics(double makespan, double comm_cost, double ave_utilization,
                            double ave_accepted_queues, const FitnessWeights& weights);

} // namespace detail

} // namespace tap
