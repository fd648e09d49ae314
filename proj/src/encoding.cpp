#include "tap/encoding.hpp"

#include <algorithm>
#include <cmath>

namespace tap {

Bounds compute_bounds(const ProblemInstance& instance, double v_max_factor) {
    validate(instance);
    if (!(v_max_factor > 0.0)) throw ValidationError("v_max_factor must be > 0");
    double s_max = 0.0;
    for (int i = 0; i < instance.num_tasks; ++i) {
        double row_max = instance.exec_time(i, 0);
        for (int j = 1; j < instance.num_processors; ++j)
            row_max = std::max(row_max, instance.exec_time(i, j));
        s_max += row_max;
    }
    return {s_max, v_max_factor * s_max};
}

Chromosome decode(std::span<const double> position, const Bounds& bounds, int num_processors) {
    Chromosome c;
    c.genes.resize(position.size());
    const double width = 2.0 * bounds.s_max;
    for (std::size_t i = 0; i < position.size(); ++i) {
        int g = static_cast<int>(
            std::floor((position[i] + bounds.s_max) / width * num_processors));
        g = std::clamp(g, 0, num_processors - 1);
        c.genes[i] = g;
    }
    return c;
}

std::vector<double> encode(const Chromosome& chromosome, const Bounds& bounds,
                           int num_processors) {
    std::vector<double> position(chromosome.genes.size());
    for (std::size_t i = 0; i < chromosome.genes.size(); ++i) {
        const double center = (chromosome.genes[i] + 0.5) / num_processors;
        position[i] = center * 2.0 * bounds.s_max - bounds.s_max;
    }
    return position;
}

std::vector<std::vector<int>> task_order(const ProblemInstance& instance,
                                         const Chromosome& chromosome) {
    validate(instance, Assignment{chromosome.genes});
    std::vector<std::vector<int>> queues(instance.num_processors);
    for (int i = 0; i < instance.num_tasks; ++i) queues[chromosome.genes[i]].push_back(i);
    for (int p = 0; p < instance.num_processors; ++p) {
        std::sort(queues[p].begin(), queues[p].end(), [&](int a, int b) {
            const double ta = instance.exec_time(a, p);
            const double tb = instance.exec_time(b, p);
            if (ta != tb) return ta > tb;
            return a < b;
        });
    }
    return queues;
}

Chromosome random_chromosome(int num_tasks, int num_processors, RngStream& rng) {
    if (num_tasks < 1 || num_processors < 1)
        throw ValidationError("random_chromosome requires n >= 1 and m >= 1");
    Chromosome c;
    c.genes.resize(num_tasks);
    for (int i = 0; i < num_tasks; ++i) c.genes[i] = rng.uniform_int(0, num_processors - 1);
    return c;
}

} // namespace tap
