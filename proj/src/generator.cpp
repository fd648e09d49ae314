#include "tap/generator.hpp"

#include <cmath>

namespace tap {

namespace {

void check_range(const Range& r, const char* name) {
    if (!std::isfinite(r.min) || !std::isfinite(r.max) || r.min < 0.0 || r.min > r.max)
        throw ValidationError(std::string(name) + " range requires 0 <= min <= max");
}

} // namespace

void validate(const GeneratorSpec& spec) {
    if (spec.num_tasks < 1) throw ValidationError("num_tasks must be >= 1");
    if (spec.num_processors < 1) throw ValidationError("num_processors must be >= 1");
    check_range(spec.exec_time, "exec_time");
    if (!(spec.exec_time.min > 0.0)) throw ValidationError("exec_time range requires min > 0");
    check_range(spec.comm_delay, "comm_delay");
    check_range(spec.comm_rate, "comm_rate");
    check_range(spec.data_volume, "data_volume");
    check_range(spec.preexisting_load, "preexisting_load");
}

ProblemInstance generate_instance(const GeneratorSpec& spec) {
    validate(spec);
    RngStream rng(spec.seed);
    const int n = spec.num_tasks;
    const int m = spec.num_processors;
    auto draw = [&](const Range& r) { return rng.uniform_real(r.min, r.max); };

    ProblemInstance instance;
    instance.num_tasks = n;
    instance.num_processors = m;
    instance.exec_time = Matrix(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) instance.exec_time(i, j) = draw(spec.exec_time);
    instance.comm_delay = Matrix(m, m);
    instance.comm_rate = Matrix(m, m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            instance.comm_delay(u, v) = u == v ? 0.0 : draw(spec.comm_delay);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            instance.comm_rate(u, v) = u == v ? 0.0 : draw(spec.comm_rate);
    instance.data_volume.resize(n);
    for (int i = 0; i < n; ++i) instance.data_volume[i] = draw(spec.data_volume);
    instance.origin.resize(n);
    for (int i = 0; i < n; ++i) instance.origin[i] = rng.uniform_int(0, m - 1);
    instance.preexisting_load.resize(m);
    for (int p = 0; p < m; ++p) instance.preexisting_load[p] = draw(spec.preexisting_load);
    validate(instance);
    return instance;
}

} // namespace tap
