#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "tap/encoding.hpp"
#include "tap/model.hpp"
#include "tap/rng.hpp"

namespace tap {

struct PSOConfig {
    int swarm_size = 10;
    int iterations = 20;
    double inertia = 0.72;
    double c1 = 1.49;
    double c2 = 1.49;
    // s_max == 0 means "derive from the instance via compute_bounds".
    Bounds bounds{};
    double v_max_factor = 0.5;
    std::uint64_t seed = 1;
};

void validate(const PSOConfig& config);

// config.bounds when set, otherwise computed from the instance.
Bounds effective_bounds(const PSOConfig& config, const ProblemInstance& instance);

struct Swarm {
    std::vector<Particle> particles;
    std::vector<MetricsReport> pbest_reports; // parallel to particles
    std::vector<double> gbest_position;
    double gbest_fitness = 0.0;
    MetricsReport gbest_report;
    Bounds bounds{};
};

// Optional per-step state recording, for trajectory assertions.
struct PsoTrace {
    std::vector<std::vector<double>> positions;
    std::vector<std::vector<double>> velocities;
};

// Velocity rule with an injectable uniform [0,1) source: per coordinate,
// v' = w*v + c1*rand1*(pbest - s) + c2*rand2*(gbest - s), clamped to
// [-v_max, v_max]. rand1 and rand2 are fresh draws per coordinate.
template <class Rand>
std::vector<double> update_velocity_with(const Particle& particle,
                                         std::span<const double> gbest_position, double inertia,
                                         double c1, double c2, double v_max, Rand&& rand01) {
    std::vector<double> velocity(particle.velocity.size());
    for (std::size_t i = 0; i < velocity.size(); ++i) {
        const double rand1 = rand01();
        const double rand2 = rand01();
        const double v = inertia * particle.velocity[i] +
                         c1 * rand1 * (particle.pbest_position[i] - particle.position[i]) +
                         c2 * rand2 * (gbest_position[i] - particle.position[i]);
        velocity[i] = std::clamp(v, -v_max, v_max);
    }
    return velocity;
}

std::vector<double> update_velocity(const Particle& particle,
                                    std::span<const double> gbest_position,
                                    const PSOConfig& config, const Bounds& bounds,
                                    RngStream& rng);

// s' = s + v' per coordinate, clamped to [-s_max, s_max].
std::vector<double> update_position(const Particle& particle, const Bounds& bounds);

// Swarm seeded around an incumbent chromosome: the first particle at its
// encoding with zero velocity, the rest perturbed by uniform offsets of
// radius s_max/m per coordinate with initial velocities drawn from the same
// radius. Consumes swarm_size evaluations.
Swarm seed_swarm(const Chromosome& incumbent, const ProblemInstance& instance,
                 const FitnessWeights& weights, const QueueThreshold& threshold,
                 const PSOConfig& config, RngStream& rng, PsoTrace* trace = nullptr);

// One synchronous step: every particle moves, is decoded and evaluated, and
// updates its pbest on strict improvement; gbest is recomputed afterwards.
// Consumes swarm_size evaluations.
void pso_iteration(Swarm& swarm, const ProblemInstance& instance, const FitnessWeights& weights,
                   const QueueThreshold& threshold, const PSOConfig& config, RngStream& rng,
                   PsoTrace* trace = nullptr);

struct LocalSearchResult {
    Chromosome chromosome;
    MetricsReport report; // meaningful only when improved
    std::uint64_t evaluations = 0;
    bool improved = false;
};

// PSO as local search. Returns the decoded gbest when it strictly beats the
// input's fitness, the unchanged input otherwise. iterations == 0 is a
// no-op: no evaluations, no RNG draws.
LocalSearchResult local_search(const Chromosome& chromosome, const ProblemInstance& instance,
                               const FitnessWeights& weights, const QueueThreshold& threshold,
                               const PSOConfig& config, RngStream& rng,
                               PsoTrace* trace = nullptr);

// Convenience overload seeding the stream from config.seed.
LocalSearchResult local_search(const Chromosome& chromosome, const ProblemInstance& instance,
                               const FitnessWeights& weights, const QueueThreshold& threshold,
                               const PSOConfig& config);

} // namespace tap
