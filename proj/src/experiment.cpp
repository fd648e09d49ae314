#include "tap/experiment.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "tap/instance_io.hpp"

namespace tap {

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::VaryTasks: return "vary-tasks";
        case ExperimentKind::VaryPopulation: return "vary-population";
        case ExperimentKind::VaryGenerations: return "vary-generations";
    }
    return "vary-tasks";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
    if (name == "vary-tasks") return ExperimentKind::VaryTasks;
    if (name == "vary-population") return ExperimentKind::VaryPopulation;
    if (name == "vary-generations") return ExperimentKind::VaryGenerations;
    throw ValidationError("unknown experiment kind: " + name);
}

std::vector<int> default_sweep(ExperimentKind kind) {
    std::vector<int> sweep;
    switch (kind) {
        case ExperimentKind::VaryTasks:
            for (int v = 20; v <= 200; v += 20) sweep.push_back(v);
            break;
        case ExperimentKind::VaryPopulation:
            for (int v = 20; v <= 100; v += 20) sweep.push_back(v);
            break;
        case ExperimentKind::VaryGenerations:
            for (int v = 50; v <= 500; v += 50) sweep.push_back(v);
            break;
    }
    return sweep;
}

void validate(const ExperimentSpec& spec) {
    if (spec.sweep.empty()) throw ValidationError("experiment sweep must be non-empty");
    for (int v : spec.sweep)
        if (v < 1) throw ValidationError("sweep values must be >= 1");
    if (spec.repetitions < 1) throw ValidationError("repetitions must be >= 1");
    validate(spec.generator);
    validate(spec.memetic);
    validate(spec.ga);
    validate(spec.weights);
    validate(spec.threshold);
}

namespace {

const char* sweep_param_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::VaryTasks: return "num_tasks";
        case ExperimentKind::VaryPopulation: return "population_size";
        case ExperimentKind::VaryGenerations: return "generations";
    }
    return "num_tasks";
}

ExperimentRow make_row(const ExperimentSpec& spec, int sweep_value, int repetition,
                       std::uint64_t seed, const std::string& solver, const RunResult& result,
                       double wall_ms) {
    ExperimentRow row;
    row.experiment = to_string(spec.kind);
    row.sweep_param = sweep_param_name(spec.kind);
    row.sweep_value = sweep_value;
    row.repetition = repetition;
    row.seed = seed;
    row.solver = solver;
    row.best_fitness = result.best_report.fitness;
    row.makespan = result.best_report.makespan;
    row.ave_utilization = result.best_report.ave_utilization;
    row.comm_cost = result.best_report.comm_cost;
    row.ave_accepted_queues = result.best_report.ave_accepted_queues;
    row.evaluations_used = result.evaluations_used;
    row.wall_time_ms = wall_ms;
    return row;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    validate(spec);
    ExperimentResult out;
    for (std::size_t point = 0; point < spec.sweep.size(); ++point) {
        const int value = spec.sweep[point];
        for (int rep = 1; rep <= spec.repetitions; ++rep) {
            const std::uint64_t row_seed = derive_seed(
                spec.seed, (static_cast<std::uint64_t>(point) << 32) |
                               static_cast<std::uint32_t>(rep));

            GeneratorSpec gen = spec.generator;
            MemeticConfig memetic = spec.memetic;
            GAConfig ga = spec.ga;
            switch (spec.kind) {
                case ExperimentKind::VaryTasks:
                    gen.num_tasks = value;
                    break;
                case ExperimentKind::VaryPopulation:
                    memetic.ga.population_size = value;
                    ga.population_size = value;
                    break;
                case ExperimentKind::VaryGenerations:
                    memetic.ga.generations = value;
                    ga.generations = value;
                    break;
            }
            gen.seed = row_seed;
            memetic.ga.seed = row_seed;
            ga.seed = row_seed;

            const ProblemInstance instance = generate_instance(gen);
            const ComparisonRecord record =
                compare(instance, spec.weights, spec.threshold, memetic, ga, spec.budget);
            out.rows.push_back(make_row(spec, value, rep, row_seed, "memetic", record.memetic,
                                        record.memetic_wall_ms));
            out.rows.push_back(
                make_row(spec, value, rep, row_seed, "ga", record.ga, record.ga_wall_ms));
        }
    }
    return out;
}

namespace {

constexpr const char* kDetailHeader =
    "experiment,sweep_param,sweep_value,repetition,seed,solver,best_fitness,makespan,"
    "ave_utilization,comm_cost,ave_accepted_queues,evaluations_used,wall_time_ms";

struct Accumulator {
    std::vector<double> values;

    void add(double v) { values.push_back(v); }
    double mean() const {
        double sum = 0.0;
        for (double v : values) sum += v;
        return sum / values.size();
    }
    double stddev() const {
        if (values.size() < 2) return 0.0;
        const double mu = mean();
        double ss = 0.0;
        for (double v : values) ss += (v - mu) * (v - mu);
        return std::sqrt(ss / (values.size() - 1));
    }
};

} // namespace

void write_detail_csv(const ExperimentResult& result, std::ostream& out) {
    out << kDetailHeader << '\n';
    for (const ExperimentRow& r : result.rows) {
        out << r.experiment << ',' << r.sweep_param << ',' << r.sweep_value << ','
            << r.repetition << ',' << r.seed << ',' << r.solver << ','
            << format_double(r.best_fitness) << ',' << format_double(r.makespan) << ','
            << format_double(r.ave_utilization) << ',' << format_double(r.comm_cost) << ','
            << format_double(r.ave_accepted_queues) << ',' << r.evaluations_used << ','
            << format_double(r.wall_time_ms) << '\n';
    }
}

void write_summary_csv(const ExperimentResult& result, std::ostream& out) {
    out << "experiment,sweep_param,sweep_value,solver,runs,"
           "mean_best_fitness,std_best_fitness,mean_makespan,std_makespan,"
           "mean_ave_utilization,std_ave_utilization,mean_comm_cost,std_comm_cost,"
           "mean_ave_accepted_queues,std_ave_accepted_queues,"
           "mean_evaluations_used,std_evaluations_used\n";
    // Group in first-appearance order: sweep order x {memetic, ga}.
    std::vector<std::pair<int, std::string>> groups;
    for (const ExperimentRow& r : result.rows) {
        const std::pair<int, std::string> key{r.sweep_value, r.solver};
        bool seen = false;
        for (const auto& g : groups)
            if (g == key) {
                seen = true;
                break;
            }
        if (!seen) groups.push_back(key);
    }
    for (const auto& [value, solver] : groups) {
        Accumulator fitness, makespan, util, cc, apq, evals;
        std::string experiment, param;
        for (const ExperimentRow& r : result.rows) {
            if (r.sweep_value != value || r.solver != solver) continue;
            experiment = r.experiment;
            param = r.sweep_param;
            fitness.add(r.best_fitness);
            makespan.add(r.makespan);
            util.add(r.ave_utilization);
            cc.add(r.comm_cost);
            apq.add(r.ave_accepted_queues);
            evals.add(static_cast<double>(r.evaluations_used));
        }
        out << experiment << ',' << param << ',' << value << ',' << solver << ','
            << fitness.values.size() << ',' << format_double(fitness.mean()) << ','
            << format_double(fitness.stddev()) << ',' << format_double(makespan.mean()) << ','
            << format_double(makespan.stddev()) << ',' << format_double(util.mean()) << ','
            << format_double(util.stddev()) << ',' << format_double(cc.mean()) << ','
            << format_double(cc.stddev()) << ',' << format_double(apq.mean()) << ','
            << format_double(apq.stddev()) << ',' << format_double(evals.mean()) << ','
            << format_double(evals.stddev()) << '\n';
    }
}

ExperimentResult run_experiment_to_dir(const ExperimentSpec& spec,
                                       const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    std::ofstream detail(out_dir / "detail.csv");
    std::ofstream summary(out_dir / "summary.csv");
    if (!detail || !summary)
        throw ValidationError("cannot write CSV output under " + out_dir.string());
    ExperimentResult result = run_experiment(spec);
    write_detail_csv(result, detail);
    write_summary_csv(result, summary);
    return result;
}

} // namespace tap
