"""Task assignment solvers: memetic (GA with PSO local search) and GA baseline.

Thin wrapper over the C++ core. Processor indices are 0-based in this API;
the text file formats are 1-based.
"""

from ._core import (
    Assignment,
    Bounds,
    BudgetExceededError,
    BudgetMode,
    Chromosome,
    ComparisonRecord,
    FitnessWeights,
    GAConfig,
    GeneratorSpec,
    MemeticConfig,
    MetricsReport,
    OracleResult,
    ProblemInstance,
    PSOConfig,
    QueueThreshold,
    Range,
    RunResult,
    ValidationError,
    compare,
    evaluate,
    exhaustive_best,
    fitness,
    generate_instance,
    naive_evaluate,
    parse_assignment,
    parse_instance,
    render_report,
    run_ga,
    run_memetic,
    serialize_assignment,
    serialize_instance,
)

__all__ = [
    "Assignment",
    "Bounds",
    "BudgetExceededError",
    "BudgetMode",
    "Chromosome",
    "ComparisonRecord",
    "FitnessWeights",
    "GAConfig",
    "GeneratorSpec",
    "MemeticConfig",
    "MetricsReport",
    "OracleResult",
    "ProblemInstance",
    "PSOConfig",
    "QueueThreshold",
    "Range",
    "RunResult",
    "ValidationError",
    "compare",
    "evaluate",
    "exhaustive_best",
    "fitness",
    "generate_instance",
    "naive_evaluate",
    "parse_assignment",
    "parse_instance",
    "render_report",
    "run_ga",
    "run_memetic",
    "serialize_assignment",
    "serialize_instance",
]
