#pragma once

#include <span>
#include <vector>

#include "tap/model.hpp"
#include "tap/rng.hpp"

namespace tap {

// Discrete genome: genes[i] = processor for task i (0-based).
struct Chromosome {
    std::vector<int> genes;

    bool operator==(const Chromosome&) const = default;
};

// Clamp ranges for particle coordinates. s_max bounds positions, v_max
// velocities; s_max is an upper bound on total serial execution time.
struct Bounds {
    double s_max = 0.0;
    double v_max = 0.0;
};

// Continuous PSO state over task coordinates.
struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> pbest_position;
    double pbest_fitness = 0.0;
};

// s_max = sum over tasks of the row-maximum execution time;
// v_max = v_max_factor * s_max.
Bounds compute_bounds(const ProblemInstance& instance, double v_max_factor = 0.5);

// Equal-width bucket map from [-s_max, s_max] to processor indices.
// Total, deterministic, and monotone per coordinate; position = +s_max
// clamps into the last bucket.
Chromosome decode(std::span<const double> position, const Bounds& bounds, int num_processors);

// Bucket-center positions for a chromosome; decode(encode(c)) == c.
std::vector<double> encode(const Chromosome& chromosome, const Bounds& bounds, int num_processors);

// Per-processor task lists ordered by execution time on that processor,
// longest first, ties by ascending task index. Queue reporting only; the
// metrics are order-independent.
std::vector<std::vector<int>> task_order(const ProblemInstance& instance,
                                         const Chromosome& chromosome);

// Uniform random genes from the given stream.
Chromosome random_chromosome(int num_tasks, int num_processors, RngStream& rng);

} // namespace tap
