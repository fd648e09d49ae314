#include "tap/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include "tap/config_json.hpp"
#include "tap/instance_io.hpp"
#include "tap/oracle.hpp"

namespace tap {

namespace {

using nlohmann::json;

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
}

// Flag values shared by the solver-driving subcommands. Every field is
// optional; resolution order is defaults, then --config file, then flags.
struct SolverOptions {
    std::string config_path;

    std::optional<double> alpha, beta, gamma, theta, cc_epsilon;
    std::optional<double> band_lower, band_upper;

    std::optional<int> population, generations, tournament_size, elite_count;
    std::optional<double> crossover_rate, mutation_rate;

    std::optional<int> swarm_size, iterations;
    std::optional<double> inertia, c1, c2, v_max_factor, s_max, v_max;

    std::optional<double> lambda;
    std::optional<int> stagnation_limit;

    std::optional<std::uint64_t> seed;
};

void add_weight_flags(CLI::App* cmd, SolverOptions& o) {
    cmd->add_option("--alpha", o.alpha, "Makespan weight in (0,1]");
    cmd->add_option("--beta", o.beta, "Communication-cost weight in (0,1]");
    cmd->add_option("--gamma", o.gamma, "Utilization weight in (0,1]");
    cmd->add_option("--theta", o.theta, "Accepted-queues weight in (0,1]");
    cmd->add_option("--cc-epsilon", o.cc_epsilon,
                    "Lower guard for the communication-cost factor in the fitness "
                    "denominator (a fully-local assignment has zero cost)");
    cmd->add_option("--band-lower", o.band_lower, "Queue acceptance band lower factor");
    cmd->add_option("--band-upper", o.band_upper, "Queue acceptance band upper factor");
    cmd->add_option("--config", o.config_path, "JSON config file (flags override it)");
}

void add_solver_flags(CLI::App* cmd, SolverOptions& o) {
    add_weight_flags(cmd, o);
    cmd->add_option("--population", o.population, "GA population size");
    cmd->add_option("--generations", o.generations, "GA generations");
    cmd->add_option("--crossover-rate", o.crossover_rate, "Crossover probability");
    cmd->add_option("--mutation-rate", o.mutation_rate,
                    "Per-gene mutation probability (default 1/num_tasks)");
    cmd->add_option("--tournament-size", o.tournament_size, "Tournament size");
    cmd->add_option("--elite-count", o.elite_count, "Individuals copied unchanged");
    cmd->add_option("--swarm-size", o.swarm_size, "PSO swarm size");
    cmd->add_option("--iterations", o.iterations, "PSO iterations per local search");
    cmd->add_option("--inertia", o.inertia, "PSO inertia factor w");
    cmd->add_option("--c1", o.c1, "PSO personal-best coefficient");
    cmd->add_option("--c2", o.c2, "PSO global-best coefficient");
    cmd->add_option("--v-max-factor", o.v_max_factor, "v_max as a fraction of s_max");
    cmd->add_option("--s-max", o.s_max, "Explicit position clamp (default: derived)");
    cmd->add_option("--v-max", o.v_max, "Explicit velocity clamp (default: derived)");
    cmd->add_option("--lambda", o.lambda, "Fraction of the population refined by PSO");
    cmd->add_option("--stagnation-limit", o.stagnation_limit,
                    "Early stop after this many stagnant generations (0 disables)");
    cmd->add_option("--seed", o.seed, "Seed for all random streams");
}

struct EffectiveConfig {
    FitnessWeights weights{};
    QueueThreshold threshold{};
    MemeticConfig memetic{};
    GAConfig ga{};
};

EffectiveConfig resolve(const SolverOptions& o) {
    EffectiveConfig cfg;
    if (!o.config_path.empty()) {
        const json j = load_config_file(o.config_path);
        if (j.contains("weights")) merge_from_json(j.at("weights"), cfg.weights);
        if (j.contains("threshold")) merge_from_json(j.at("threshold"), cfg.threshold);
        if (j.contains("ga")) {
            merge_from_json(j.at("ga"), cfg.ga);
            merge_from_json(j.at("ga"), cfg.memetic.ga);
        }
        if (j.contains("pso")) merge_from_json(j.at("pso"), cfg.memetic.pso);
        if (j.contains("memetic")) merge_from_json(j.at("memetic"), cfg.memetic);
    }
    auto set = [](auto& target, const auto& opt) {
        if (opt) target = *opt;
    };
    set(cfg.weights.alpha, o.alpha);
    set(cfg.weights.beta, o.beta);
    set(cfg.weights.gamma, o.gamma);
    set(cfg.weights.theta, o.theta);
    set(cfg.weights.cc_epsilon, o.cc_epsilon);
    set(cfg.threshold.lower_factor, o.band_lower);
    set(cfg.threshold.upper_factor, o.band_upper);

    for (GAConfig* ga : {&cfg.ga, &cfg.memetic.ga}) {
        set(ga->population_size, o.population);
        set(ga->generations, o.generations);
        set(ga->crossover_rate, o.crossover_rate);
        if (o.mutation_rate) ga->mutation_rate = *o.mutation_rate;
        set(ga->tournament_size, o.tournament_size);
        set(ga->elite_count, o.elite_count);
        set(ga->seed, o.seed);
    }
    PSOConfig& pso = cfg.memetic.pso;
    set(pso.swarm_size, o.swarm_size);
    set(pso.iterations, o.iterations);
    set(pso.inertia, o.inertia);
    set(pso.c1, o.c1);
    set(pso.c2, o.c2);
    set(pso.v_max_factor, o.v_max_factor);
    set(pso.bounds.s_max, o.s_max);
    set(pso.bounds.v_max, o.v_max);
    set(pso.seed, o.seed);
    set(cfg.memetic.local_search_fraction, o.lambda);
    set(cfg.memetic.stagnation_limit, o.stagnation_limit);
    return cfg;
}

void echo_config(std::ostream& out, const json& effective) {
    out << "effective config:\n" << effective.dump(2) << '\n';
}

json run_result_summary(const RunResult& result) {
    return to_json(result, /*include_trace=*/false);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write file: " + path.string());
    f << text;
}

int cmd_generate(const SolverOptions& common, const GeneratorSpec& flags_spec,
                 const std::vector<std::optional<std::pair<double, double>>>& ranges,
                 const std::string& out_path, std::ostream& out) {
    GeneratorSpec spec;
    if (!common.config_path.empty()) {
        const json j = load_config_file(common.config_path);
        if (j.contains("generator")) merge_from_json(j.at("generator"), spec);
    }
    if (flags_spec.num_tasks > 0) spec.num_tasks = flags_spec.num_tasks;
    if (flags_spec.num_processors > 0) spec.num_processors = flags_spec.num_processors;
    const std::array<Range*, 5> targets{&spec.exec_time, &spec.comm_delay, &spec.comm_rate,
                                        &spec.data_volume, &spec.preexisting_load};
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (ranges[i]) *targets[i] = Range{ranges[i]->first, ranges[i]->second};
    if (common.seed) spec.seed = *common.seed;

    echo_config(out, json{{"generator", to_json(spec)}});
    const ProblemInstance instance = generate_instance(spec);
    save_instance_file(instance, out_path);
    out << "wrote instance (n=" << instance.num_tasks << ", m=" << instance.num_processors
        << ") to " << out_path << '\n';
    return 0;
}

int cmd_evaluate(const SolverOptions& o, const std::string& instance_path,
                 const std::string& assignment_path, const std::string& out_path,
                 std::ostream& out) {
    const EffectiveConfig cfg = resolve(o);
    echo_config(out, json{{"weights", to_json(cfg.weights)},
                          {"threshold", to_json(cfg.threshold)}});
    const ProblemInstance instance = load_instance_file(instance_path);
    const Assignment assignment = load_assignment_file(assignment_path);
    const MetricsReport report = evaluate(instance, assignment, cfg.weights, cfg.threshold);
    const std::string text = render_report(report);
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
    return 0;
}

int cmd_solve(const SolverOptions& o, const std::string& instance_path,
              const std::string& solver, const std::string& out_path,
              const std::string& result_path, std::ostream& out) {
    const EffectiveConfig cfg = resolve(o);
    const ProblemInstance instance = load_instance_file(instance_path);

    json effective{{"solver", solver},
                   {"weights", to_json(cfg.weights)},
                   {"threshold", to_json(cfg.threshold)}};
    if (solver == "memetic")
        effective["memetic"] = to_json(cfg.memetic);
    else
        effective["ga"] = to_json(cfg.ga);
    // Echo the mutation rate the run will actually use.
    auto& solver_json = solver == "memetic" ? effective["memetic"]["ga"] : effective["ga"];
    if (solver_json["mutation_rate"].is_null())
        solver_json["mutation_rate"] = 1.0 / instance.num_tasks;
    echo_config(out, effective);

    const auto t0 = std::chrono::steady_clock::now();
    RunResult result;
    if (solver == "memetic")
        result = run_memetic(instance, cfg.weights, cfg.threshold, cfg.memetic);
    else if (solver == "ga")
        result = run_ga(instance, cfg.weights, cfg.threshold, cfg.ga);
    else
        throw ValidationError("unknown solver: " + solver);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    save_assignment_file(Assignment{result.best_chromosome.genes}, out_path);
    out << "best_fitness " << format_double(result.best_report.fitness) << '\n'
        << "makespan " << format_double(result.best_report.makespan) << '\n'
        << "ave_utilization " << format_double(result.best_report.ave_utilization) << '\n'
        << "evaluations_used " << result.evaluations_used << '\n'
        << "wall_time_ms " << format_double(wall_ms) << '\n'
        << "wrote assignment to " << out_path << '\n';
    if (!result_path.empty()) {
        json run{{"config", effective}, {"result", to_json(result)}, {"wall_time_ms", wall_ms}};
        write_text_file(result_path, run.dump(2) + "\n");
    }
    return 0;
}

int cmd_compare(const SolverOptions& o, const std::string& instance_path,
                const std::string& budget, const std::string& out_path, std::ostream& out) {
    const EffectiveConfig cfg = resolve(o);
    const BudgetMode mode = budget_mode_from_string(budget);
    echo_config(out, json{{"budget", budget},
                          {"weights", to_json(cfg.weights)},
                          {"threshold", to_json(cfg.threshold)},
                          {"memetic", to_json(cfg.memetic)},
                          {"ga", to_json(cfg.ga)}});
    const ProblemInstance instance = load_instance_file(instance_path);
    const ComparisonRecord record =
        compare(instance, cfg.weights, cfg.threshold, cfg.memetic, cfg.ga, mode);
    const json record_json = to_json(record);
    if (out_path.empty())
        out << record_json.dump(2) << '\n';
    else
        write_text_file(out_path, record_json.dump(2) + "\n");
    out << "memetic best makespan " << format_double(record.memetic.best_report.makespan)
        << ", ga best makespan " << format_double(record.ga.best_report.makespan) << '\n';
    return 0;
}

int cmd_oracle(const SolverOptions& o, const std::string& instance_path, std::uint64_t limit,
               const std::string& out_path, std::ostream& out) {
    const EffectiveConfig cfg = resolve(o);
    echo_config(out, json{{"limit", limit},
                          {"weights", to_json(cfg.weights)},
                          {"threshold", to_json(cfg.threshold)}});
    const ProblemInstance instance = load_instance_file(instance_path);
    const OracleResult result = exhaustive_best(instance, cfg.weights, cfg.threshold, limit);
    out << "best_fitness " << format_double(result.best_fitness) << '\n'
        << "optima_count " << result.optima_count << '\n';
    out << "best_assignment";
    for (int f : result.best_assignment.target) out << ' ' << f + 1;
    out << '\n';
    if (!out_path.empty()) save_assignment_file(result.best_assignment, out_path);
    return 0;
}

int cmd_experiment(const std::string& spec_path, const std::string& out_dir, std::ostream& out) {
    const ExperimentSpec spec = load_experiment_spec(spec_path);
    echo_config(out, to_json(spec));
    const ExperimentResult result = run_experiment_to_dir(spec, out_dir);
    out << "wrote " << result.rows.size() << " detail rows to " << out_dir << "/detail.csv"
        << " and summary to " << out_dir << "/summary.csv\n";
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Task assignment solver: memetic (GA + PSO local search) and GA baselines",
                 "tap"};
    app.require_subcommand(1);

    SolverOptions opts;

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a random instance file");
    GeneratorSpec gen_flags;
    gen_flags.num_tasks = 0; // sentinel: flag not given
    gen_flags.num_processors = 0;
    std::vector<std::optional<std::pair<double, double>>> gen_ranges(5);
    generate->add_option("--n", gen_flags.num_tasks, "Number of tasks");
    generate->add_option("--m", gen_flags.num_processors, "Number of processors");
    generate->add_option("--exec-time", gen_ranges[0], "Execution time range MIN MAX");
    generate->add_option("--comm-delay", gen_ranges[1], "Communication delay range MIN MAX");
    generate->add_option("--comm-rate", gen_ranges[2], "Per-unit transfer time range MIN MAX");
    generate->add_option("--data-volume", gen_ranges[3], "Data volume range MIN MAX");
    generate->add_option("--preload", gen_ranges[4], "Preexisting load range MIN MAX");
    generate->add_option("--seed", opts.seed, "Generator seed");
    generate->add_option("--config", opts.config_path, "JSON config file (generator section)");
    std::string gen_out;
    generate->add_option("--out", gen_out, "Output instance file")->required();

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "Evaluate an assignment against an instance");
    std::string eval_instance, eval_assignment, eval_out;
    eval->add_option("--instance", eval_instance, "Instance file")->required();
    eval->add_option("--assignment", eval_assignment, "Assignment file")->required();
    eval->add_option("--out", eval_out, "Write the report here instead of stdout");
    add_weight_flags(eval, opts);

    // solve
    auto* solve = app.add_subcommand("solve", "Run one solver on an instance");
    std::string solve_instance, solve_solver, solve_out, solve_result_out;
    solve->add_option("--instance", solve_instance, "Instance file")->required();
    solve->add_option("--solver", solve_solver, "Solver: ga or memetic")
        ->required()
        ->check(CLI::IsMember({"ga", "memetic"}));
    solve->add_option("--out", solve_out, "Output assignment file")->required();
    solve->add_option("--result-out", solve_result_out, "Write the full run result JSON here");
    add_solver_flags(solve, opts);

    // compare
    auto* comp = app.add_subcommand("compare", "Run both solvers under budget parity");
    std::string comp_instance, comp_budget = "evaluations", comp_out;
    comp->add_option("--instance", comp_instance, "Instance file")->required();
    comp->add_option("--budget", comp_budget, "Budget parity: generations or evaluations")
        ->check(CLI::IsMember({"generations", "evaluations"}));
    comp->add_option("--out", comp_out, "Write the comparison record JSON here");
    add_solver_flags(comp, opts);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimal assignment (small instances)");
    std::string oracle_instance, oracle_out;
    std::uint64_t oracle_limit = 2'000'000;
    oracle->add_option("--instance", oracle_instance, "Instance file")->required();
    oracle->add_option("--limit", oracle_limit, "Maximum m^n assignments to enumerate");
    oracle->add_option("--out", oracle_out, "Write the best assignment file here");
    add_weight_flags(oracle, opts);

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a sweep experiment to CSV");
    std::string exp_spec, exp_out_dir;
    experiment->add_option("--spec", exp_spec, "Experiment spec JSON file")->required();
    experiment->add_option("--out-dir", exp_out_dir, "Directory for detail.csv and summary.csv")
        ->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (generate->parsed()) return cmd_generate(opts, gen_flags, gen_ranges, gen_out, out);
        if (eval->parsed()) return cmd_evaluate(opts, eval_instance, eval_assignment, eval_out, out);
        if (solve->parsed())
            return cmd_solve(opts, solve_instance, solve_solver, solve_out, solve_result_out, out);
        if (comp->parsed()) return cmd_compare(opts, comp_instance, comp_budget, comp_out, out);
        if (oracle->parsed())
            return cmd_oracle(opts, oracle_instance, oracle_limit, oracle_out, out);
        if (experiment->parsed()) return cmd_experiment(exp_spec, exp_out_dir, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace tap
