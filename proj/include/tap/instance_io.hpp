#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tap/model.hpp"

namespace tap {

// Text formats. Numbers are written with shortest round-trip precision, so
// parse(serialize(x)) == x exactly. Processor indices are 1-based in files
// (origin, assignment targets); the API stays 0-based.

void serialize_instance(const ProblemInstance& instance, std::ostream& out);
std::string serialize_instance(const ProblemInstance& instance);
ProblemInstance parse_instance(std::istream& in);
ProblemInstance parse_instance_string(const std::string& text);
ProblemInstance load_instance_file(const std::filesystem::path& path);
void save_instance_file(const ProblemInstance& instance, const std::filesystem::path& path);

void serialize_assignment(const Assignment& assignment, std::ostream& out);
std::string serialize_assignment(const Assignment& assignment);
Assignment parse_assignment(std::istream& in);
Assignment parse_assignment_string(const std::string& text);
Assignment load_assignment_file(const std::filesystem::path& path);
void save_assignment_file(const Assignment& assignment, const std::filesystem::path& path);

// Human-readable metrics listing; per-processor vectors are positional,
// processor 1 first.
std::string render_report(const MetricsReport& report);

// Shortest round-trip decimal form of a double ("2" stays "2").
std::string format_double(double value);

} // namespace tap
