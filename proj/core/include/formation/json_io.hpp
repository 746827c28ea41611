#pragma once

#include "formation/distributed.hpp"
#include "formation/validator.hpp"

#include <string>
#include <vector>

namespace formation {

// JSON plumbing for every pipeline artifact. Serializers emit a fixed field
// order, two-space indentation, and a trailing newline, so identical values
// produce byte-identical files. Parsers throw std::invalid_argument with a
// field-level message on malformed input or violated invariants.

std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

std::string serialize_path_set(const PathSet& q);
PathSet parse_path_set(const std::string& text);

std::string serialize_schedule(const Schedule& s);
Schedule parse_schedule(const std::string& text);

std::string serialize_timed(const TimedSchedule& ts);
TimedSchedule parse_timed(const std::string& text);

std::string serialize_trace(const SimTrace& trace); // embeds its schedule

std::string serialize_violations(const std::vector<Violation>& violations);

// `plan --explain` payload: per cluster, member paths and the sorted
// (vertex, value) pairs of its distance value function.
std::string serialize_ordering(const std::vector<Cluster>& clusters,
                               const DistanceValues& dvals);

} // namespace formation
