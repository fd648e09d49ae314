#pragma once

#include <json.hpp>

#include "tap/experiment.hpp"

namespace tap {

// JSON views of configs and results. from-json functions merge: keys present
// in the document override the passed-in defaults, everything else is kept,
// so an echoed config always shows every effective value.

nlohmann::json to_json(const FitnessWeights& weights);
nlohmann::json to_json(const QueueThreshold& threshold);
nlohmann::json to_json(const GAConfig& config);
nlohmann::json to_json(const PSOConfig& config);
nlohmann::json to_json(const MemeticConfig& config);
nlohmann::json to_json(const GeneratorSpec& spec);
nlohmann::json to_json(const ExperimentSpec& spec);
nlohmann::json to_json(const RunResult& result, bool include_trace = true);
nlohmann::json to_json(const ComparisonRecord& record);

void merge_from_json(const nlohmann::json& j, FitnessWeights& weights);
void merge_from_json(const nlohmann::json& j, QueueThreshold& threshold);
void merge_from_json(const nlohmann::json& j, GAConfig& config);
void merge_from_json(const nlohmann::json& j, PSOConfig& config);
void merge_from_json(const nlohmann::json& j, MemeticConfig& config);
void merge_from_json(const nlohmann::json& j, GeneratorSpec& spec);
void merge_from_json(const nlohmann::json& j, ExperimentSpec& spec);

ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

} // namespace tap
