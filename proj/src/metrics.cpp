#include "hlplan/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "hlplan/rng.hpp"

namespace hlplan {

int hlp_accuracy_static(const HighLevelPlan& predicted, const HighLevelPlan& gold) {
  return predicted == gold ? 1 : 0;
}

bool executed_matches_gold_prefix(const HighLevelPlan& executed, const HighLevelPlan& gold) {
  if (executed.empty()) return false;
  if (executed.size() > gold.size()) return false;
  return std::equal(executed.begin(), executed.end(), gold.begin());
}

std::pair<double, double> hlp_accuracy_dynamic(
    std::span<const EpisodeTrace> traces,
    const std::map<std::string, HighLevelPlan>& golds) {
  if (traces.empty()) return {0.0, 0.0};
  double lower = 0.0;
  double upper = 0.0;
  for (const EpisodeTrace& trace : traces) {
    auto it = golds.find(trace.task_id);
    if (it == golds.end()) {
      throw MismatchedIds("no gold plan for task " + trace.task_id);
    }
    lower += hlp_accuracy_static(trace.full_predicted_hlp, it->second);
    upper += executed_matches_gold_prefix(trace.executed_hlp, it->second) ? 1.0 : 0.0;
  }
  const double n = static_cast<double>(traces.size());
  return {lower / n, upper / n};
}

MetricReport compute_report(std::span<const EpisodeTrace> traces,
                            std::span<const TaskInstance> tasks,
                            std::string config_fingerprint) {
  std::map<std::string, const TaskInstance*> by_id;
  for (const TaskInstance& task : tasks) by_id[task.id] = &task;

  MetricReport report;
  report.config_fingerprint = std::move(config_fingerprint);
  report.episodes = static_cast<int>(traces.size());

  struct Accum {
    int episodes = 0;
    int successes = 0;
    long long gc_satisfied = 0;
    long long gc_total = 0;
    int exact_full = 0;
    int prefix_ok = 0;
  };
  Accum all;
  std::map<TaskType, Accum> per_type;

  for (const EpisodeTrace& trace : traces) {
    auto it = by_id.find(trace.task_id);
    if (it == by_id.end()) {
      throw MismatchedIds("trace for unknown task " + trace.task_id);
    }
    const TaskInstance& task = *it->second;
    auto update = [&](Accum& a) {
      ++a.episodes;
      a.successes += trace.success ? 1 : 0;
      a.gc_satisfied += trace.gc_satisfied;
      a.gc_total += trace.gc_total;
      a.exact_full += hlp_accuracy_static(trace.full_predicted_hlp, task.gold_hlp);
      a.prefix_ok += executed_matches_gold_prefix(trace.executed_hlp, task.gold_hlp) ? 1 : 0;
    };
    update(all);
    update(per_type[task.task_type]);
  }

  auto fill = [](const Accum& a, double& sr, double& gc, double& acc_static, double& lower,
                 double& upper) {
    const double n = a.episodes > 0 ? static_cast<double>(a.episodes) : 1.0;
    sr = a.successes / n;
    gc = a.gc_total > 0 ? static_cast<double>(a.gc_satisfied) / static_cast<double>(a.gc_total)
                        : 0.0;
    acc_static = a.exact_full / n;
    lower = a.exact_full / n;
    upper = a.prefix_ok / n;
  };

  fill(all, report.sr, report.gc, report.hlp_acc_static, report.hlp_acc_lower,
       report.hlp_acc_upper);
  for (const auto& [type, accum] : per_type) {
    TaskTypeMetrics m;
    fill(accum, m.sr, m.gc, m.hlp_acc_static, m.hlp_acc_lower, m.hlp_acc_upper);
    m.episodes = accum.episodes;
    report.per_task_type[type] = m;
  }
  return report;
}

nlohmann::json report_to_json(const MetricReport& report) {
  nlohmann::json j;
  j["sr"] = report.sr;
  j["gc"] = report.gc;
  j["hlp_acc_static"] = report.hlp_acc_static;
  j["hlp_acc_dynamic"] = {{"lower", report.hlp_acc_lower}, {"upper", report.hlp_acc_upper}};
  nlohmann::json per_type = nlohmann::json::object();
  for (const auto& [type, m] : report.per_task_type) {
    per_type[std::string(task_type_name(type))] = {
        {"sr", m.sr},
        {"gc", m.gc},
        {"hlp_acc_static", m.hlp_acc_static},
        {"hlp_acc_dynamic", {{"lower", m.hlp_acc_lower}, {"upper", m.hlp_acc_upper}}},
        {"episodes", m.episodes},
    };
  }
  j["per_task_type"] = per_type;
  j["episodes"] = report.episodes;
  j["config_fingerprint"] = report.config_fingerprint;
  return j;
}

MetricReport report_from_json(const nlohmann::json& j) {
  MetricReport report;
  report.sr = j.at("sr").get<double>();
  report.gc = j.at("gc").get<double>();
  report.hlp_acc_static = j.at("hlp_acc_static").get<double>();
  report.hlp_acc_lower = j.at("hlp_acc_dynamic").at("lower").get<double>();
  report.hlp_acc_upper = j.at("hlp_acc_dynamic").at("upper").get<double>();
  for (const auto& [name, m] : j.at("per_task_type").items()) {
    const auto type = parse_task_type(name);
    if (!type) throw std::runtime_error("unknown task type in report: " + name);
    TaskTypeMetrics metrics;
    metrics.sr = m.at("sr").get<double>();
    metrics.gc = m.at("gc").get<double>();
    metrics.hlp_acc_static = m.at("hlp_acc_static").get<double>();
    metrics.hlp_acc_lower = m.at("hlp_acc_dynamic").at("lower").get<double>();
    metrics.hlp_acc_upper = m.at("hlp_acc_dynamic").at("upper").get<double>();
    metrics.episodes = m.at("episodes").get<int>();
    report.per_task_type[*type] = metrics;
  }
  report.episodes = j.at("episodes").get<int>();
  report.config_fingerprint = j.at("config_fingerprint").get<std::string>();
  return report;
}

std::string report_to_table(const MetricReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  auto row = [&](const std::string& name, double sr, double gc, double acc, double lower,
                 double upper, int episodes) {
    out << std::left << std::setw(16) << name << std::right << std::setw(8) << sr
        << std::setw(8) << gc << std::setw(10) << acc << std::setw(9) << lower
        << std::setw(9) << upper << std::setw(10) << episodes << '\n';
  };
  out << std::left << std::setw(16) << "task type" << std::right << std::setw(8) << "SR"
      << std::setw(8) << "GC" << std::setw(10) << "HLP" << std::setw(9) << "low"
      << std::setw(9) << "high" << std::setw(10) << "episodes" << '\n';
  for (const auto& [type, m] : report.per_task_type) {
    row(std::string(task_type_name(type)), m.sr, m.gc, m.hlp_acc_static, m.hlp_acc_lower,
        m.hlp_acc_upper, m.episodes);
  }
  row("overall", report.sr, report.gc, report.hlp_acc_static, report.hlp_acc_lower,
      report.hlp_acc_upper, report.episodes);
  return out.str();
}

std::string config_fingerprint(const nlohmann::json& config) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(config.dump());
  return out.str();
}

}  // namespace hlplan
