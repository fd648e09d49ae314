#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tap/config_json.hpp"
#include "tap/instance_io.hpp"
#include "tap/oracle.hpp"

namespace py = pybind11;

namespace {

tap::ProblemInstance make_instance(const std::vector<std::vector<double>>& exec_time,
                                   const std::vector<std::vector<double>>& comm_delay,
                                   const std::vector<std::vector<double>>& comm_rate,
                                   const std::vector<double>& data_volume,
                                   const std::vector<int>& origin,
                                   const std::vector<double>& preexisting_load) {
    tap::ProblemInstance instance;
    instance.num_tasks = static_cast<int>(exec_time.size());
    instance.num_processors = exec_time.empty() ? 0 : static_cast<int>(exec_time[0].size());
    instance.exec_time = tap::Matrix::from_rows(exec_time);
    instance.comm_delay = tap::Matrix::from_rows(comm_delay);
    instance.comm_rate = tap::Matrix::from_rows(comm_rate);
    instance.data_volume = data_volume;
    instance.origin = origin;
    instance.preexisting_load = preexisting_load;
    tap::validate(instance);
    return instance;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Task assignment solvers: memetic (GA with PSO local search), GA baseline, "
              "exhaustive oracle, metrics, instance generator and file formats. "
              "Processor indices are 0-based here; files are 1-based.";

    py::register_exception<tap::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<tap::BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);

    py::class_<tap::ProblemInstance>(m, "ProblemInstance")
        .def(py::init(&make_instance), py::arg("exec_time"), py::arg("comm_delay"),
             py::arg("comm_rate"), py::arg("data_volume"), py::arg("origin"),
             py::arg("preexisting_load"))
        .def_readonly("num_tasks", &tap::ProblemInstance::num_tasks)
        .def_readonly("num_processors", &tap::ProblemInstance::num_processors)
        .def_property_readonly("exec_time",
                               [](const tap::ProblemInstance& p) { return p.exec_time.to_rows(); })
        .def_property_readonly("comm_delay",
                               [](const tap::ProblemInstance& p) { return p.comm_delay.to_rows(); })
        .def_property_readonly("comm_rate",
                               [](const tap::ProblemInstance& p) { return p.comm_rate.to_rows(); })
        .def_readonly("data_volume", &tap::ProblemInstance::data_volume)
        .def_readonly("origin", &tap::ProblemInstance::origin)
        .def_readonly("preexisting_load", &tap::ProblemInstance::preexisting_load)
        .def("__eq__", [](const tap::ProblemInstance& a, const tap::ProblemInstance& b) {
            return a == b;
        });

    py::class_<tap::Assignment>(m, "Assignment")
        .def(py::init([](std::vector<int> target) { return tap::Assignment{std::move(target)}; }),
             py::arg("target"))
        .def_readwrite("target", &tap::Assignment::target)
        .def("__eq__", [](const tap::Assignment& a, const tap::Assignment& b) { return a == b; });

    py::class_<tap::FitnessWeights>(m, "FitnessWeights")
        .def(py::init([](double alpha, double beta, double gamma, double theta,
                         double cc_epsilon) {
                 return tap::FitnessWeights{alpha, beta, gamma, theta, cc_epsilon};
             }),
             py::arg("alpha") = 1.0, py::arg("beta") = 1.0, py::arg("gamma") = 1.0,
             py::arg("theta") = 1.0, py::arg("cc_epsilon") = 1.0)
        .def_readwrite("alpha", &tap::FitnessWeights::alpha)
        .def_readwrite("beta", &tap::FitnessWeights::beta)
        .def_readwrite("gamma", &tap::FitnessWeights::gamma)
        .def_readwrite("theta", &tap::FitnessWeights::theta)
        .def_readwrite("cc_epsilon", &tap::FitnessWeights::cc_epsilon);

    py::class_<tap::QueueThreshold>(m, "QueueThreshold")
        .def(py::init([](double lower, double upper) {
                 return tap::QueueThreshold{lower, upper};
             }),
             py::arg("lower_factor") = 0.5, py::arg("upper_factor") = 1.5)
        .def_readwrite("lower_factor", &tap::QueueThreshold::lower_factor)
        .def_readwrite("upper_factor", &tap::QueueThreshold::upper_factor);

    py::class_<tap::MetricsReport>(m, "MetricsReport")
        .def_readonly("per_processor_load", &tap::MetricsReport::per_processor_load)
        .def_readonly("makespan", &tap::MetricsReport::makespan)
        .def_readonly("comm_cost", &tap::MetricsReport::comm_cost)
        .def_readonly("per_processor_utilization",
                      &tap::MetricsReport::per_processor_utilization)
        .def_readonly("ave_utilization", &tap::MetricsReport::ave_utilization)
        .def_readonly("accepted_queues", &tap::MetricsReport::accepted_queues)
        .def_readonly("ave_accepted_queues", &tap::MetricsReport::ave_accepted_queues)
        .def_readonly("fitness", &tap::MetricsReport::fitness);

    py::class_<tap::Chromosome>(m, "Chromosome")
        .def(py::init([](std::vector<int> genes) { return tap::Chromosome{std::move(genes)}; }),
             py::arg("genes"))
        .def_readwrite("genes", &tap::Chromosome::genes);

    py::class_<tap::GAConfig>(m, "GAConfig")
        .def(py::init<>())
        .def_readwrite("population_size", &tap::GAConfig::population_size)
        .def_readwrite("generations", &tap::GAConfig::generations)
        .def_readwrite("crossover_rate", &tap::GAConfig::crossover_rate)
        .def_readwrite("mutation_rate", &tap::GAConfig::mutation_rate)
        .def_readwrite("tournament_size", &tap::GAConfig::tournament_size)
        .def_readwrite("elite_count", &tap::GAConfig::elite_count)
        .def_readwrite("seed", &tap::GAConfig::seed);

    py::class_<tap::Bounds>(m, "Bounds")
        .def(py::init([](double s_max, double v_max) { return tap::Bounds{s_max, v_max}; }),
             py::arg("s_max") = 0.0, py::arg("v_max") = 0.0)
        .def_readwrite("s_max", &tap::Bounds::s_max)
        .def_readwrite("v_max", &tap::Bounds::v_max);

    py::class_<tap::PSOConfig>(m, "PSOConfig")
        .def(py::init<>())
        .def_readwrite("swarm_size", &tap::PSOConfig::swarm_size)
        .def_readwrite("iterations", &tap::PSOConfig::iterations)
        .def_readwrite("inertia", &tap::PSOConfig::inertia)
        .def_readwrite("c1", &tap::PSOConfig::c1)
        .def_readwrite("c2", &tap::PSOConfig::c2)
        .def_readwrite("bounds", &tap::PSOConfig::bounds)
        .def_readwrite("v_max_factor", &tap::PSOConfig::v_max_factor)
        .def_readwrite("seed", &tap::PSOConfig::seed);

    py::class_<tap::MemeticConfig>(m, "MemeticConfig")
        .def(py::init<>())
        .def_readwrite("ga", &tap::MemeticConfig::ga)
        .def_readwrite("pso", &tap::MemeticConfig::pso)
        .def_readwrite("local_search_fraction", &tap::MemeticConfig::local_search_fraction)
        .def_readwrite("stagnation_limit", &tap::MemeticConfig::stagnation_limit);

    py::class_<tap::RunResult>(m, "RunResult")
        .def_readonly("best_chromosome", &tap::RunResult::best_chromosome)
        .def_readonly("best_report", &tap::RunResult::best_report)
        .def_readonly("fitness_trace", &tap::RunResult::fitness_trace)
        .def_readonly("evaluations_used", &tap::RunResult::evaluations_used);

    py::enum_<tap::BudgetMode>(m, "BudgetMode")
        .value("EQUAL_GENERATIONS", tap::BudgetMode::EqualGenerations)
        .value("EQUAL_EVALUATIONS", tap::BudgetMode::EqualEvaluations);

    py::class_<tap::ComparisonRecord>(m, "ComparisonRecord")
        .def_readonly("budget_mode", &tap::ComparisonRecord::budget_mode)
        .def_readonly("declared_budget", &tap::ComparisonRecord::declared_budget)
        .def_readonly("memetic", &tap::ComparisonRecord::memetic)
        .def_readonly("ga", &tap::ComparisonRecord::ga)
        .def_readonly("ga_generations", &tap::ComparisonRecord::ga_generations);

    py::class_<tap::OracleResult>(m, "OracleResult")
        .def_readonly("best_assignment", &tap::OracleResult::best_assignment)
        .def_readonly("best_fitness", &tap::OracleResult::best_fitness)
        .def_readonly("optima_count", &tap::OracleResult::optima_count);

    py::class_<tap::Range>(m, "Range")
        .def(py::init([](double min, double max) { return tap::Range{min, max}; }),
             py::arg("min"), py::arg("max"))
        .def_readwrite("min", &tap::Range::min)
        .def_readwrite("max", &tap::Range::max);

    py::class_<tap::GeneratorSpec>(m, "GeneratorSpec")
        .def(py::init<>())
        .def_readwrite("num_tasks", &tap::GeneratorSpec::num_tasks)
        .def_readwrite("num_processors", &tap::GeneratorSpec::num_processors)
        .def_readwrite("exec_time", &tap::GeneratorSpec::exec_time)
        .def_readwrite("comm_delay", &tap::GeneratorSpec::comm_delay)
        .def_readwrite("comm_rate", &tap::GeneratorSpec::comm_rate)
        .def_readwrite("data_volume", &tap::GeneratorSpec::data_volume)
        .def_readwrite("preexisting_load", &tap::GeneratorSpec::preexisting_load)
        .def_readwrite("seed", &tap::GeneratorSpec::seed);

    m.def("evaluate", &tap::evaluate, py::arg("instance"), py::arg("assignment"),
          py::arg("weights") = tap::FitnessWeights{}, py::arg("threshold") = tap::QueueThreshold{},
          "All metrics for one assignment.");
    m.def("fitness", &tap::fitness, py::arg("instance"), py::arg("assignment"),
          py::arg("weights") = tap::FitnessWeights{}, py::arg("threshold") = tap::QueueThreshold{});
    m.def("naive_evaluate", &tap::naive_evaluate, py::arg("instance"), py::arg("assignment"),
          py::arg("weights") = tap::FitnessWeights{}, py::arg("threshold") = tap::QueueThreshold{},
          "Independent reference metrics (verification only).");
    m.def("generate_instance", &tap::generate_instance, py::arg("spec"));
    m.def("run_ga", &tap::run_ga, py::arg("instance"), py::arg("weights"), py::arg("threshold"),
          py::arg("config"));
    m.def("run_memetic", &tap::run_memetic, py::arg("instance"), py::arg("weights"),
          py::arg("threshold"), py::arg("config"));
    m.def("compare", &tap::compare, py::arg("instance"), py::arg("weights"), py::arg("threshold"),
          py::arg("memetic_config"), py::arg("ga_config"), py::arg("budget_mode"));
    m.def("exhaustive_best", &tap::exhaustive_best, py::arg("instance"), py::arg("weights"),
          py::arg("threshold"), py::arg("limit") = 2'000'000ull);

    m.def("serialize_instance",
          static_cast<std::string (*)(const tap::ProblemInstance&)>(&tap::serialize_instance));
    m.def("parse_instance", &tap::parse_instance_string, py::arg("text"));
    m.def("serialize_assignment",
          static_cast<std::string (*)(const tap::Assignment&)>(&tap::serialize_assignment));
    m.def("parse_assignment", &tap::parse_assignment_string, py::arg("text"));
    m.def("render_report", &tap::render_report, py::arg("report"));
}
