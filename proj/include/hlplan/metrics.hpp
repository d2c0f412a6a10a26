#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "hlplan/controller.hpp"
#include "hlplan/task.hpp"

namespace hlplan {

class MismatchedIds : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 1 iff the sequences match exactly: length, order, actions, objects.
int hlp_accuracy_static(const HighLevelPlan& predicted, const HighLevelPlan& gold);

// An episode scores on the upper bound iff what it actually executed is a
// non-empty exact prefix of (or equal to) the gold plan.
bool executed_matches_gold_prefix(const HighLevelPlan& executed, const HighLevelPlan& gold);

// Lower bound: exact-match accuracy of the full generated plan regardless
// of execution. Upper bound: accuracy of the successfully executed prefix.
std::pair<double, double> hlp_accuracy_dynamic(
    std::span<const EpisodeTrace> traces,
    const std::map<std::string, HighLevelPlan>& golds);

struct TaskTypeMetrics {
  double sr = 0.0;
  double gc = 0.0;
  double hlp_acc_static = 0.0;
  double hlp_acc_lower = 0.0;
  double hlp_acc_upper = 0.0;
  int episodes = 0;
};

struct MetricReport {
  double sr = 0.0;
  double gc = 0.0;  // micro-averaged: total satisfied / total conditions
  double hlp_acc_static = 0.0;
  double hlp_acc_lower = 0.0;
  double hlp_acc_upper = 0.0;
  std::map<TaskType, TaskTypeMetrics> per_task_type;
  int episodes = 0;
  std::string config_fingerprint;
};

// Aggregates one trace per task; traces and tasks align by id.
MetricReport compute_report(std::span<const EpisodeTrace> traces,
                            std::span<const TaskInstance> tasks,
                            std::string config_fingerprint = "");

nlohmann::json report_to_json(const MetricReport& report);
MetricReport report_from_json(const nlohmann::json& j);
std::string report_to_table(const MetricReport& report);

// Stable hex fingerprint of a canonical config JSON; any field change
// changes the fingerprint.
std::string config_fingerprint(const nlohmann::json& config);

}  // namespace hlplan
