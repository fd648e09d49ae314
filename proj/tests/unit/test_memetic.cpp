#include <doctest.h>

#include <algorithm>

#include "tap/memetic.hpp"
#include "tap/oracle.hpp"
#include "test_support.hpp"

using namespace tap;

namespace {

MemeticConfig small_config(std::uint64_t seed, int generations = 20) {
    MemeticConfig config;
    config.ga.population_size = 20;
    config.ga.generations = generations;
    config.ga.seed = seed;
    config.pso.swarm_size = 5;
    config.pso.iterations = 4;
    return config;
}

} // namespace

TEST_CASE("memetic with zero PSO iterations reduces to the pure GA") {
    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        const auto instance = test::random_instance(derive_seed(50, seed), 10, 4);
        MemeticConfig config = small_config(seed);
        config.pso.iterations = 0;

        const RunResult memetic = run_memetic(instance, {}, {}, config);
        const RunResult ga = run_ga(instance, {}, {}, config.ga);
        CHECK(memetic.fitness_trace == ga.fitness_trace);
        CHECK(memetic.best_chromosome == ga.best_chromosome);
        CHECK(memetic.evaluations_used == ga.evaluations_used);
    }
}

TEST_CASE("memetic trace is non-decreasing and deterministic") {
    const auto instance = test::random_instance(51, 12, 4);
    const MemeticConfig config = small_config(52);

    const RunResult a = run_memetic(instance, {}, {}, config);
    const RunResult b = run_memetic(instance, {}, {}, config);
    CHECK(a.fitness_trace == b.fitness_trace);
    CHECK(a.best_chromosome == b.best_chromosome);
    CHECK(a.evaluations_used == b.evaluations_used);
    CHECK(std::is_sorted(a.fitness_trace.begin(), a.fitness_trace.end()));
    CHECK(a.best_report.fitness == a.fitness_trace.back());
}

TEST_CASE("memetic evaluation accounting is exact") {
    const auto instance = test::random_instance(53, 8, 3);
    MemeticConfig config = small_config(54, 15);
    config.local_search_fraction = 0.2; // ceil(0.2 * 20) = 4 refinements per generation

    const RunResult result = run_memetic(instance, {}, {}, config);
    const std::uint64_t ga_evals = 20ull * (15 + 1);
    const std::uint64_t per_call = 5ull * (4 + 1);
    CHECK(result.evaluations_used == ga_evals + 15ull * 4ull * per_call);
}

TEST_CASE("memetic best report stays consistent with its chromosome") {
    const auto instance = test::random_instance(55, 10, 4);
    const RunResult result = run_memetic(instance, {}, {}, small_config(56));
    const auto re = evaluate(instance, Assignment{result.best_chromosome.genes}, {}, {});
    CHECK(re.fitness == result.best_report.fitness);
    CHECK(re.makespan == result.best_report.makespan);
    CHECK(re.per_processor_load == result.best_report.per_processor_load);
}

TEST_CASE("memetic reaches the exhaustive optimum on tiny instances") {
    // Subset of the acceptance sweep: 5 seeds, n=6, m=3 (729 assignments).
    int matched = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const auto instance = test::random_instance(derive_seed(57, trial), 6, 3);
        MemeticConfig config;
        config.ga.population_size = 50;
        config.ga.generations = 50;
        config.ga.seed = derive_seed(58, trial);
        const RunResult result = run_memetic(instance, {}, {}, config);
        const OracleResult oracle = exhaustive_best(instance, {}, {});
        CHECK(result.best_report.fitness <= oracle.best_fitness + 1e-12);
        if (std::abs(result.best_report.fitness - oracle.best_fitness) <= 1e-9) ++matched;
    }
    CHECK(matched >= 4);
}

TEST_CASE("stagnation limit stops early without breaking accounting") {
    const auto instance = test::random_instance(59, 6, 2);
    MemeticConfig config = small_config(60, 500);
    config.stagnation_limit = 5;

    const RunResult result = run_memetic(instance, {}, {}, config);
    // Trace length = generations actually run + 1; must have stopped early.
    CHECK(result.fitness_trace.size() < 501);
    CHECK(std::is_sorted(result.fitness_trace.begin(), result.fitness_trace.end()));
    // The last stagnation_limit entries show no strict improvement.
    const auto& trace = result.fitness_trace;
    const std::size_t len = trace.size();
    REQUIRE(len >= 6);
    CHECK(trace[len - 1] == trace[len - 6]);
}

TEST_CASE("compare under equal generations with a degenerate memetic equals self-comparison") {
    const auto instance = test::random_instance(61, 9, 3);
    MemeticConfig config = small_config(62);
    config.pso.iterations = 0;

    const ComparisonRecord record = compare(instance, {}, {}, config, config.ga,
                                            BudgetMode::EqualGenerations);
    CHECK(record.memetic.fitness_trace == record.ga.fitness_trace);
    CHECK(record.memetic.best_chromosome == record.ga.best_chromosome);
    CHECK(record.declared_budget == static_cast<std::uint64_t>(config.ga.generations));
}

TEST_CASE("compare carries both traces and honours the evaluation budget") {
    const auto instance = test::random_instance(63, 10, 4);
    const MemeticConfig config = small_config(64);

    const ComparisonRecord record =
        compare(instance, {}, {}, config, config.ga, BudgetMode::EqualEvaluations);
    CHECK(!record.memetic.fitness_trace.empty());
    CHECK(!record.ga.fitness_trace.empty());
    CHECK(record.declared_budget == record.memetic.evaluations_used);
    // The GA receives at least the declared budget, within one population of it.
    CHECK(record.ga.evaluations_used >= record.declared_budget);
    CHECK(record.ga.evaluations_used <
          record.declared_budget + static_cast<std::uint64_t>(config.ga.population_size));
}

TEST_CASE("memetic config validation") {
    MemeticConfig config;
    config.local_search_fraction = 0.0;
    CHECK_THROWS_AS(validate(config), ValidationError);
    config = {};
    config.local_search_fraction = 1.5;
    CHECK_THROWS_AS(validate(config), ValidationError);
    config = {};
    config.stagnation_limit = -1;
    CHECK_THROWS_AS(validate(config), ValidationError);
    config = {};
    config.ga.elite_count = config.ga.population_size;
    CHECK_THROWS_AS(validate(config), ValidationError);
    CHECK_NOTHROW(validate(MemeticConfig{}));

    const std::string mode_name = to_string(BudgetMode::EqualEvaluations);
    CHECK(budget_mode_from_string(mode_name) == BudgetMode::EqualEvaluations);
    CHECK_THROWS_AS(budget_mode_from_string("nonsense"), ValidationError);
}
