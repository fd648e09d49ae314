#include "tap/pso.hpp"

namespace tap {

void validate(const PSOConfig& config) {
    if (config.swarm_size < 1) throw ValidationError("swarm_size must be >= 1");
    if (config.iterations < 0) throw ValidationError("iterations must be >= 0");
    if (config.inertia < 0.0) throw ValidationError("inertia must be >= 0");
    if (config.c1 < 0.0 || config.c2 < 0.0) throw ValidationError("c1 and c2 must be >= 0");
    if (config.bounds.s_max < 0.0 || config.bounds.v_max < 0.0)
        throw ValidationError("bounds must be non-negative");
    if (config.bounds.s_max > 0.0 && !(config.bounds.v_max > 0.0))
        throw ValidationError("explicit bounds require v_max > 0");
    if (!(config.v_max_factor > 0.0)) throw ValidationError("v_max_factor must be > 0");
}

Bounds effective_bounds(const PSOConfig& config, const ProblemInstance& instance) {
    if (config.bounds.s_max > 0.0) return config.bounds;
    return compute_bounds(instance, config.v_max_factor);
}

std::vector<double> update_velocity(const Particle& particle,
                                    std::span<const double> gbest_position,
                                    const PSOConfig& config, const Bounds& bounds,
                                    RngStream& rng) {
    return update_velocity_with(particle, gbest_position, config.inertia, config.c1, config.c2,
                                bounds.v_max, [&rng] { return rng.uniform01(); });
}

std::vector<double> update_position(const Particle& particle, const Bounds& bounds) {
    std::vector<double> position(particle.position.size());
    for (std::size_t i = 0; i < position.size(); ++i)
        position[i] =
            std::clamp(particle.position[i] + particle.velocity[i], -bounds.s_max, bounds.s_max);
    return position;
}

namespace {

void record(PsoTrace* trace, const Swarm& swarm) {
    if (!trace) return;
    for (const Particle& p : swarm.particles) {
        trace->positions.push_back(p.position);
        trace->velocities.push_back(p.velocity);
    }
}

} // namespace

Swarm seed_swarm(const Chromosome& incumbent, const ProblemInstance& instance,
                 const FitnessWeights& weights, const QueueThreshold& threshold,
                 const PSOConfig& config, RngStream& rng, PsoTrace* trace) {
    validate(config);
    validate(instance, Assignment{incumbent.genes});
    Swarm swarm;
    swarm.bounds = effective_bounds(config, instance);
    const int n = instance.num_tasks;
    const double radius = swarm.bounds.s_max / instance.num_processors;
    const std::vector<double> center = encode(incumbent, swarm.bounds, instance.num_processors);

    const double velocity_radius = std::min(radius, swarm.bounds.v_max);
    swarm.particles.resize(config.swarm_size);
    swarm.pbest_reports.resize(config.swarm_size);
    for (int k = 0; k < config.swarm_size; ++k) {
        Particle& p = swarm.particles[k];
        p.position = center;
        p.velocity.assign(n, 0.0);
        if (k > 0) {
            for (int i = 0; i < n; ++i)
                p.position[i] = std::clamp(p.position[i] + rng.uniform_real(-radius, radius),
                                           -swarm.bounds.s_max, swarm.bounds.s_max);
            for (int i = 0; i < n; ++i)
                p.velocity[i] = rng.uniform_real(-velocity_radius, velocity_radius);
        }
        p.pbest_position = p.position;
        const Chromosome c = decode(p.position, swarm.bounds, instance.num_processors);
        swarm.pbest_reports[k] = evaluate(instance, Assignment{c.genes}, weights, threshold);
        p.pbest_fitness = swarm.pbest_reports[k].fitness;
        if (k == 0 || p.pbest_fitness > swarm.gbest_fitness) {
            swarm.gbest_position = p.position;
            swarm.gbest_fitness = p.pbest_fitness;
            swarm.gbest_report = swarm.pbest_reports[k];
        }
    }
    record(trace, swarm);
    return swarm;
}

void pso_iteration(Swarm& swarm, const ProblemInstance& instance, const FitnessWeights& weights,
                   const QueueThreshold& threshold, const PSOConfig& config, RngStream& rng,
                   PsoTrace* trace) {
    for (std::size_t k = 0; k < swarm.particles.size(); ++k) {
        Particle& p = swarm.particles[k];
        p.velocity = update_velocity(p, swarm.gbest_position, config, swarm.bounds, rng);
        p.position = update_position(p, swarm.bounds);
        const Chromosome c = decode(p.position, swarm.bounds, instance.num_processors);
        const MetricsReport report = evaluate(instance, Assignment{c.genes}, weights, threshold);
        if (report.fitness > p.pbest_fitness) {
            p.pbest_position = p.position;
            p.pbest_fitness = report.fitness;
            swarm.pbest_reports[k] = report;
        }
    }
    for (std::size_t k = 0; k < swarm.particles.size(); ++k) {
        if (swarm.particles[k].pbest_fitness > swarm.gbest_fitness) {
            swarm.gbest_position = swarm.particles[k].pbest_position;
            swarm.gbest_fitness = swarm.particles[k].pbest_fitness;
            swarm.gbest_report = swarm.pbest_reports[k];
        }
    }
    record(trace, swarm);
}

LocalSearchResult local_search(const Chromosome& chromosome, const ProblemInstance& instance,
                               const FitnessWeights& weights, const QueueThreshold& threshold,
                               const PSOConfig& config, RngStream& rng, PsoTrace* trace) {
    if (config.iterations == 0) return {chromosome, {}, 0, false};
    Swarm swarm = seed_swarm(chromosome, instance, weights, threshold, config, rng, trace);
    const double input_fitness = swarm.particles[0].pbest_fitness;
    for (int it = 0; it < config.iterations; ++it)
        pso_iteration(swarm, instance, weights, threshold, config, rng, trace);
    const std::uint64_t evaluations =
        static_cast<std::uint64_t>(config.swarm_size) * (config.iterations + 1);
    if (swarm.gbest_fitness > input_fitness) {
        Chromosome best = decode(swarm.gbest_position, swarm.bounds, instance.num_processors);
        return {std::move(best), swarm.gbest_report, evaluations, true};
    }
    return {chromosome, {}, evaluations, false};
}

LocalSearchResult local_search(const Chromosome& chromosome, const ProblemInstance& instance,
                               const FitnessWeights& weights, const QueueThreshold& threshold,
                               const PSOConfig& config) {
    RngStream rng(config.seed);
    return local_search(chromosome, instance, weights, threshold, config, rng);
}

} // namespace tap
