#include "tap/config_json.hpp"

#include <fstream>

namespace tap {

using nlohmann::json;

namespace {

template <class T>
void get_if_present(const json& j, const char* key, T& out) {
    if (j.contains(key)) j.at(key).get_to(out);
}

json range_to_json(const Range& r) { return json{{"min", r.min}, {"max", r.max}}; }

void range_from_json(const json& j, Range& r) {
    get_if_present(j, "min", r.min);
    get_if_present(j, "max", r.max);
}

} // namespace

json to_json(const FitnessWeights& weights) {
    return json{{"alpha", weights.alpha},
                {"beta", weights.beta},
                {"gamma", weights.gamma},
                {"theta", weights.theta},
                {"cc_epsilon", weights.cc_epsilon}};
}

json to_json(const QueueThreshold& threshold) {
    return json{{"lower_factor", threshold.lower_factor},
                {"upper_factor", threshold.upper_factor}};
}

json to_json(const GAConfig& config) {
    json j{{"population_size", config.population_size},
           {"generations", config.generations},
           {"crossover_rate", config.crossover_rate},
           {"tournament_size", config.tournament_size},
           {"elite_count", config.elite_count},
           {"seed", config.seed}};
    if (config.mutation_rate)
        j["mutation_rate"] = *config.mutation_rate;
    else
        j["mutation_rate"] = nullptr; // resolved to 1/num_tasks at run start
    return j;
}

json to_json(const PSOConfig& config) {
    return json{{"swarm_size", config.swarm_size},
                {"iterations", config.iterations},
                {"inertia", config.inertia},
                {"c1", config.c1},
                {"c2", config.c2},
                {"s_max", config.bounds.s_max},
                {"v_max", config.bounds.v_max},
                {"v_max_factor", config.v_max_factor},
                {"seed", config.seed}};
}

json to_json(const MemeticConfig& config) {
    return json{{"ga", to_json(config.ga)},
                {"pso", to_json(config.pso)},
                {"local_search_fraction", config.local_search_fraction},
                {"stagnation_limit", config.stagnation_limit}};
}

json to_json(const GeneratorSpec& spec) {
    return json{{"num_tasks", spec.num_tasks},
                {"num_processors", spec.num_processors},
                {"exec_time", range_to_json(spec.exec_time)},
                {"comm_delay", range_to_json(spec.comm_delay)},
                {"comm_rate", range_to_json(spec.comm_rate)},
                {"data_volume", range_to_json(spec.data_volume)},
                {"preexisting_load", range_to_json(spec.preexisting_load)},
                {"seed", spec.seed}};
}

json to_json(const ExperimentSpec& spec) {
    return json{{"kind", to_string(spec.kind)},
                {"sweep", spec.sweep},
                {"repetitions", spec.repetitions},
                {"generator", to_json(spec.generator)},
                {"memetic", to_json(spec.memetic)},
                {"ga", to_json(spec.ga)},
                {"weights", to_json(spec.weights)},
                {"threshold", to_json(spec.threshold)},
                {"budget", to_string(spec.budget)},
                {"seed", spec.seed}};
}

json to_json(const RunResult& result, bool include_trace) {
    std::vector<int> assignment;
    assignment.reserve(result.best_chromosome.genes.size());
    for (int g : result.best_chromosome.genes) assignment.push_back(g + 1);
    json j{{"best_assignment", assignment},
           {"best_fitness", result.best_report.fitness},
           {"makespan", result.best_report.makespan},
           {"comm_cost", result.best_report.comm_cost},
           {"ave_utilization", result.best_report.ave_utilization},
           {"accepted_queues", result.best_report.accepted_queues},
           {"ave_accepted_queues", result.best_report.ave_accepted_queues},
           {"evaluations_used", result.evaluations_used},
           {"generations_run",
            result.fitness_trace.empty() ? 0 : result.fitness_trace.size() - 1}};
    if (include_trace) j["fitness_trace"] = result.fitness_trace;
    return j;
}

json to_json(const ComparisonRecord& record) {
    return json{{"budget_mode", to_string(record.budget_mode)},
                {"declared_budget", record.declared_budget},
                {"ga_generations", record.ga_generations},
                {"memetic", to_json(record.memetic)},
                {"ga", to_json(record.ga)},
                {"memetic_wall_ms", record.memetic_wall_ms},
                {"ga_wall_ms", record.ga_wall_ms}};
}

void merge_from_json(const json& j, FitnessWeights& weights) {
    get_if_present(j, "alpha", weights.alpha);
    get_if_present(j, "beta", weights.beta);
    get_if_present(j, "gamma", weights.gamma);
    get_if_present(j, "theta", weights.theta);
    get_if_present(j, "cc_epsilon", weights.cc_epsilon);
}

void merge_from_json(const json& j, QueueThreshold& threshold) {
    get_if_present(j, "lower_factor", threshold.lower_factor);
    get_if_present(j, "upper_factor", threshold.upper_factor);
}

void merge_from_json(const json& j, GAConfig& config) {
    get_if_present(j, "population_size", config.population_size);
    get_if_present(j, "generations", config.generations);
    get_if_present(j, "crossover_rate", config.crossover_rate);
    if (j.contains("mutation_rate")) {
        if (j.at("mutation_rate").is_null())
            config.mutation_rate.reset();
        else
            config.mutation_rate = j.at("mutation_rate").get<double>();
    }
    get_if_present(j, "tournament_size", config.tournament_size);
    get_if_present(j, "elite_count", config.elite_count);
    get_if_present(j, "seed", config.seed);
}

void merge_from_json(const json& j, PSOConfig& config) {
    get_if_present(j, "swarm_size", config.swarm_size);
    get_if_present(j, "iterations", config.iterations);
    get_if_present(j, "inertia", config.inertia);
    get_if_present(j, "c1", config.c1);
    get_if_present(j, "c2", config.c2);
    get_if_present(j, "s_max", config.bounds.s_max);
    get_if_present(j, "v_max", config.bounds.v_max);
    get_if_present(j, "v_max_factor", config.v_max_factor);
    get_if_present(j, "seed", config.seed);
}

void merge_from_json(const json& j, MemeticConfig& config) {
    if (j.contains("ga")) merge_from_json(j.at("ga"), config.ga);
    if (j.contains("pso")) merge_from_json(j.at("pso"), config.pso);
    get_if_present(j, "local_search_fraction", config.local_search_fraction);
    get_if_present(j, "stagnation_limit", config.stagnation_limit);
}

void merge_from_json(const json& j, GeneratorSpec& spec) {
    get_if_present(j, "num_tasks", spec.num_tasks);
    get_if_present(j, "num_processors", spec.num_processors);
    if (j.contains("exec_time")) range_from_json(j.at("exec_time"), spec.exec_time);
    if (j.contains("comm_delay")) range_from_json(j.at("comm_delay"), spec.comm_delay);
    if (j.contains("comm_rate")) range_from_json(j.at("comm_rate"), spec.comm_rate);
    if (j.contains("data_volume")) range_from_json(j.at("data_volume"), spec.data_volume);
    if (j.contains("preexisting_load"))
        range_from_json(j.at("preexisting_load"), spec.preexisting_load);
    get_if_present(j, "seed", spec.seed);
}

void merge_from_json(const json& j, ExperimentSpec& spec) {
    if (j.contains("kind")) spec.kind = experiment_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("sweep"))
        spec.sweep = j.at("sweep").get<std::vector<int>>();
    else if (spec.sweep.empty())
        spec.sweep = default_sweep(spec.kind);
    get_if_present(j, "repetitions", spec.repetitions);
    if (j.contains("generator")) merge_from_json(j.at("generator"), spec.generator);
    if (j.contains("memetic")) merge_from_json(j.at("memetic"), spec.memetic);
    if (j.contains("ga")) merge_from_json(j.at("ga"), spec.ga);
    if (j.contains("weights")) merge_from_json(j.at("weights"), spec.weights);
    if (j.contains("threshold")) merge_from_json(j.at("threshold"), spec.threshold);
    if (j.contains("budget"))
        spec.budget = budget_mode_from_string(j.at("budget").get<std::string>());
    get_if_present(j, "seed", spec.seed);
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open experiment spec: " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("invalid JSON in " + path.string() + ": " + e.what());
    }
    ExperimentSpec spec;
    merge_from_json(j, spec);
    validate(spec);
    return spec;
}

} // namespace tap
