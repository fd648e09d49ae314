#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tap/model.hpp"
#include "tap/oracle.hpp"
#include "test_support.hpp"

using namespace tap;
using test::rel_close;
using test::worked_instance;

namespace {

ProblemInstance single_task_instance(double exec = 5.0) {
    ProblemInstance instance;
    instance.num_tasks = 1;
    instance.num_processors = 1;
    instance.exec_time = Matrix::from_rows({{exec}});
    instance.comm_delay = Matrix(1, 1, 0.0);
    instance.comm_rate = Matrix(1, 1, 0.0);
    instance.data_volume = {0.0};
    instance.origin = {0};
    instance.preexisting_load = {0.0};
    return instance;
}

} // namespace

TEST_CASE("load sums execution times onto the target processor") {
    const auto single = single_task_instance();
    CHECK(load(single, Assignment{{0}}, 0) == 5.0);

    auto instance = worked_instance();
    const Assignment split{{0, 1}};
    CHECK(load(instance, split, 0) == 2.0);
    CHECK(load(instance, split, 1) == 1.0);

    instance.preexisting_load = {10.0, 0.0};
    CHECK(load(instance, split, 0) == 12.0);
    CHECK(load(instance, split, 1) == 1.0);
}

TEST_CASE("load validates the processor index and assignment") {
    const auto instance = worked_instance();
    CHECK_THROWS_AS(load(instance, Assignment{{0, 1}}, 2), ValidationError);
    CHECK_THROWS_AS(load(instance, Assignment{{0, 1}}, -1), ValidationError);
    CHECK_THROWS_AS(load(instance, Assignment{{0}}, 0), ValidationError);
    CHECK_THROWS_AS(load(instance, Assignment{{0, 2}}, 0), ValidationError);
}

TEST_CASE("makespan is the maximum processor load") {
    const auto instance = worked_instance();
    CHECK(makespan(instance, Assignment{{0, 0}}) == 5.0); // all on p1
    CHECK(makespan(instance, Assignment{{0, 1}}) == 2.0);
    CHECK(makespan(instance, Assignment{{1, 1}}) == 5.0); // 4 + 1
}

TEST_CASE("comm_cost follows the delay-plus-volume rule") {
    const auto instance = worked_instance();
    CHECK(comm_cost(instance, Assignment{{0, 0}}) == 0.0); // F = C
    CHECK(comm_cost(instance, Assignment{{0, 1}}) == 2.0); // 1 + 0.5*2
    CHECK(comm_cost(instance, Assignment{{1, 1}}) == 4.0);
}

TEST_CASE("utilization divides load by makespan") {
    const auto instance = worked_instance();
    const Assignment split{{0, 1}};
    CHECK(utilization(instance, split, 0) == 1.0);
    CHECK(utilization(instance, split, 1) == 0.5);

    const Assignment stacked{{0, 0}};
    CHECK(utilization(instance, stacked, 1) == 0.0); // empty processor
    CHECK(utilization(instance, stacked, 0) == 1.0); // carries the makespan
}

TEST_CASE("ave_utilization averages over processors") {
    CHECK(ave_utilization(single_task_instance(), Assignment{{0}}) == 1.0);
    CHECK(ave_utilization(worked_instance(), Assignment{{0, 1}}) == 0.75);

    // Identical processors, perfectly balanced loads.
    ProblemInstance balanced = worked_instance();
    balanced.exec_time = Matrix::from_rows({{2.0, 2.0}, {2.0, 2.0}});
    CHECK(ave_utilization(balanced, Assignment{{0, 1}}) == 1.0);
}

TEST_CASE("accepted_queues counts loads within the band") {
    const QueueThreshold band{0.5, 1.5};

    // Perfectly balanced: every load equals the mean.
    ProblemInstance balanced = worked_instance();
    balanced.exec_time = Matrix::from_rows({{2.0, 2.0}, {2.0, 2.0}});
    auto [count_b, avg_b] = accepted_queues(balanced, Assignment{{0, 1}}, band);
    CHECK(count_b == 2);
    CHECK(avg_b == 1.0);

    // Loads [2,1], band [0.75, 2.25].
    auto [count_s, avg_s] = accepted_queues(worked_instance(), Assignment{{0, 1}}, band);
    CHECK(count_s == 2);
    CHECK(avg_s == 1.0);

    // Loads [4,0] via preload, band [1,3]: both rejected.
    ProblemInstance skewed = single_task_instance(2.0);
    skewed.num_processors = 2;
    skewed.exec_time = Matrix::from_rows({{2.0, 2.0}});
    skewed.comm_delay = Matrix(2, 2, 0.0);
    skewed.comm_rate = Matrix(2, 2, 0.0);
    skewed.preexisting_load = {2.0, 0.0};
    auto [count_k, avg_k] = accepted_queues(skewed, Assignment{{0}}, band);
    CHECK(count_k == 0);
    CHECK(avg_k == 0.0);
}

TEST_CASE("fitness matches the hand-worked ratio") {
    const auto instance = worked_instance();
    const Assignment split{{0, 1}};
    CHECK(fitness(instance, split, {}, {}) == doctest::Approx(0.1875).epsilon(1e-12));

    // Linear in alpha: halving alpha exactly doubles the value.
    FitnessWeights halved;
    halved.alpha = 0.5;
    CHECK(fitness(instance, split, halved, {}) ==
          doctest::Approx(2.0 * 0.1875).epsilon(1e-12));
}

TEST_CASE("fitness is monotone in its metric inputs") {
    const FitnessWeights w{};
    const double base = detail::fitness_from_metrics(2.0, 2.0, 0.75, 1.0, w);
    CHECK(base == doctest::Approx(0.1875).epsilon(1e-12));
    CHECK(detail::fitness_from_metrics(3.0, 2.0, 0.75, 1.0, w) < base);
    CHECK(detail::fitness_from_metrics(2.0, 2.0, 0.8, 1.0, w) > base);
    // Exact linear scaling in alpha: halving alpha doubles the ratio.
    FitnessWeights half_alpha{};
    half_alpha.alpha = 0.5;
    CHECK(detail::fitness_from_metrics(2.0, 2.0, 0.75, 1.0, half_alpha) == 2.0 * base);
}

TEST_CASE("fitness guards zero communication cost but not zero accepted queues") {
    const auto instance = worked_instance();
    // F = C: comm cost 0, guarded to cc_epsilon = 1.
    const auto report = evaluate(instance, Assignment{{0, 0}}, {}, {});
    CHECK(report.comm_cost == 0.0);
    // Loads [5,0]: mean 2.5, band [1.25,3.75], nothing accepted -> fitness 0.
    CHECK(report.ave_accepted_queues == 0.0);
    CHECK(report.fitness == 0.0);

    // A guarded case where the queues are accepted: balanced instance, F = C.
    ProblemInstance balanced = worked_instance();
    balanced.exec_time = Matrix::from_rows({{2.0, 2.0}, {2.0, 2.0}});
    balanced.origin = {0, 1};
    const auto local = evaluate(balanced, Assignment{{0, 1}}, {}, {});
    CHECK(local.comm_cost == 0.0);
    CHECK(local.ave_utilization == 1.0);
    // fitness = (1*1) / (1*2 * 1*max(0,1)) = 0.5
    CHECK(local.fitness == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("evaluate produces the full worked report") {
    const auto report = evaluate(worked_instance(), Assignment{{0, 1}}, {}, {});
    CHECK(report.per_processor_load == std::vector<double>{2.0, 1.0});
    CHECK(report.makespan == 2.0);
    CHECK(report.comm_cost == 2.0);
    CHECK(report.per_processor_utilization == std::vector<double>{1.0, 0.5});
    CHECK(report.ave_utilization == 0.75);
    CHECK(report.accepted_queues == 2);
    CHECK(report.ave_accepted_queues == 1.0);
    CHECK(report.fitness == doctest::Approx(0.1875).epsilon(1e-12));
}

TEST_CASE("evaluate on a single cell") {
    const auto report = evaluate(single_task_instance(), Assignment{{0}}, {}, {});
    CHECK(report.makespan == 5.0);
    CHECK(report.comm_cost == 0.0);
    CHECK(report.ave_utilization == 1.0);
    CHECK(report.ave_accepted_queues == 1.0);
    // (1*1)/(5 * max(0,1)) = 0.2
    CHECK(report.fitness == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("evaluate fields are mutually consistent and reproducible") {
    RngStream rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform_int(1, 12);
        const int m = rng.uniform_int(1, 6);
        const auto instance = test::random_instance(derive_seed(99, trial), n, m);
        const auto assignment = test::random_assignment(rng, n, m);
        const auto report = evaluate(instance, assignment, {}, {});

        CHECK(report.makespan ==
              *std::max_element(report.per_processor_load.begin(),
                                report.per_processor_load.end()));
        double util_sum = 0.0;
        for (int p = 0; p < m; ++p) {
            CHECK(report.per_processor_utilization[p] ==
                  report.per_processor_load[p] / report.makespan);
            util_sum += report.per_processor_utilization[p];
        }
        CHECK(rel_close(report.ave_utilization, util_sum / m, 1e-12));
        CHECK(report.fitness ==
              detail::fitness_from_metrics(report.makespan, report.comm_cost,
                                           report.ave_utilization, report.ave_accepted_queues,
                                           {}));

        // Individual operations reproduce the report fields.
        CHECK(makespan(instance, assignment) == report.makespan);
        CHECK(comm_cost(instance, assignment) == report.comm_cost);
        for (int p = 0; p < m; ++p)
            CHECK(load(instance, assignment, p) == report.per_processor_load[p]);
    }
}

TEST_CASE("metric identities hold on random instances") {
    RngStream rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(1, 15);
        const int m = rng.uniform_int(1, 8);
        const auto instance = test::random_instance(derive_seed(7, trial), n, m);
        const auto assignment = test::random_assignment(rng, n, m);
        const auto report = evaluate(instance, assignment, {}, {});

        // AveU * m * makespan == total load.
        const double total =
            std::accumulate(report.per_processor_load.begin(),
                            report.per_processor_load.end(), 0.0);
        CHECK(rel_close(report.ave_utilization * m * report.makespan, total, 1e-9));

        // comm_cost vanishes when every task stays home.
        Assignment home{instance.origin};
        CHECK(comm_cost(instance, home) == 0.0);
    }
}

TEST_CASE("comm_cost is invariant under consistent task permutation") {
    RngStream rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(2, 12);
        const int m = rng.uniform_int(2, 6);
        auto instance = test::random_instance(derive_seed(21, trial), n, m);
        const auto assignment = test::random_assignment(rng, n, m);
        const double before = comm_cost(instance, assignment);

        // Random permutation of task indices, applied to D, C, F (and the
        // exec rows, to keep the instance valid).
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);

        ProblemInstance shuffled = instance;
        Assignment shuffled_assignment = assignment;
        for (int i = 0; i < n; ++i) {
            shuffled.data_volume[i] = instance.data_volume[perm[i]];
            shuffled.origin[i] = instance.origin[perm[i]];
            shuffled_assignment.target[i] = assignment.target[perm[i]];
            for (int j = 0; j < m; ++j)
                shuffled.exec_time(i, j) = instance.exec_time(perm[i], j);
        }
        CHECK(rel_close(comm_cost(shuffled, shuffled_assignment), before, 1e-12));
    }
}

TEST_CASE("naive_evaluate agrees with evaluate on a quick random suite") {
    RngStream rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(1, 20);
        const int m = rng.uniform_int(1, 8);
        const auto instance = test::random_instance(derive_seed(1234, trial), n, m);
        const auto assignment = test::random_assignment(rng, n, m);
        const auto a = evaluate(instance, assignment, {}, {});
        const auto b = naive_evaluate(instance, assignment, {}, {});
        CHECK(rel_close(a.makespan, b.makespan));
        CHECK(rel_close(a.comm_cost, b.comm_cost));
        CHECK(rel_close(a.ave_utilization, b.ave_utilization));
        CHECK(a.accepted_queues == b.accepted_queues);
        CHECK(rel_close(a.fitness, b.fitness));
    }
}

TEST_CASE("instance validation rejects malformed data") {
    auto good = worked_instance();
    CHECK_NOTHROW(validate(good));

    auto bad = good;
    bad.num_tasks = 0;
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = good;
    bad.exec_time(0, 1) = 0.0;
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = good;
    bad.comm_delay(0, 0) = 1.0;
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = good;
    bad.comm_rate(1, 0) = -0.5;
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = good;
    bad.origin[1] = 2;
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = good;
    bad.data_volume.pop_back();
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = good;
    bad.preexisting_load = {0.0};
    CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("weight and threshold validation") {
    FitnessWeights w;
    w.alpha = 0.0;
    CHECK_THROWS_AS(validate(w), ValidationError);
    w = {};
    w.theta = 1.5;
    CHECK_THROWS_AS(validate(w), ValidationError);
    w = {};
    w.cc_epsilon = 0.0;
    CHECK_THROWS_AS(validate(w), ValidationError);

    QueueThreshold t;
    t.lower_factor = 0.0;
    CHECK_THROWS_AS(validate(t), ValidationError);
    t = {};
    t.upper_factor = 0.4;
    CHECK_THROWS_AS(validate(t), ValidationError);
}
