#pragma once

#include <cstdint>

#include "tap/model.hpp"
#include "tap/rng.hpp"

namespace tap {

struct Range {
    double min = 0.0;
    double max = 0.0;
};

// Uniform random instance distribution. Defaults are heterogeneous but not
// pathological; preexisting load defaults to zero.
struct GeneratorSpec {
    int num_tasks = 50;
    int num_processors = 8;
    Range exec_time{1.0, 50.0};
    Range comm_delay{0.0, 10.0};
    Range comm_rate{0.0, 2.0};
    Range data_volume{0.0, 20.0};
    Range preexisting_load{0.0, 0.0};
    std::uint64_t seed = 1;
};

void validate(const GeneratorSpec& spec);

// Entries drawn uniformly from their ranges via the seeded stream; comm
// matrix diagonals forced to zero; origins uniform over processors. The
// result always passes instance validation.
ProblemInstance generate_instance(const GeneratorSpec& spec);

} // namespace tap
