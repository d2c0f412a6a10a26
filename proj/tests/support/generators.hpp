#pragma once

// Shared test-only helpers: seeded random plans, random corpora, random
// scenes, and the independent oracles required by the verification plan.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hlplan/backend.hpp"
#include "hlplan/controller.hpp"
#include "hlplan/embedding.hpp"
#include "hlplan/parse.hpp"
#include "hlplan/rng.hpp"
#include "hlplan/scene.hpp"
#include "hlplan/scripted_backend.hpp"
#include "hlplan/task.hpp"

namespace hlplan::testing {

inline HighLevelPlan random_plan(std::mt19937_64& gen, const ObjectVocabulary& vocab,
                                 std::size_t min_len, std::size_t max_len) {
  const std::vector<ObjectClass> classes = vocab.classes();
  const std::size_t len =
      min_len + static_cast<std::size_t>(uniform_below(gen, max_len - min_len + 1));
  HighLevelPlan plan;
  for (std::size_t i = 0; i < len; ++i) {
    const HighLevelAction action =
        all_actions()[static_cast<std::size_t>(uniform_below(gen, kHighLevelActionCount))];
    const ObjectClass object =
        classes[static_cast<std::size_t>(uniform_below(gen, classes.size()))];
    plan.push_back(Subgoal{action, object});
  }
  return plan;
}

inline std::string random_text(std::mt19937_64& gen, std::size_t max_len) {
  static const char alphabet[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 ,.\n\t";
  const std::size_t len = static_cast<std::size_t>(uniform_below(gen, max_len + 1));
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(alphabet[uniform_below(gen, sizeof(alphabet) - 1)]);
  }
  return out;
}

inline TaskInstance simple_task(const std::string& id, TaskType type, const std::string& goal,
                                const HighLevelPlan& gold, const std::string& scene_id = "s") {
  TaskInstance task;
  task.id = id;
  task.task_type = type;
  task.instruction.goal = goal;
  task.gold_hlp = gold;
  task.scene_id = scene_id;
  GoalCondition gc;
  gc.predicate = GoalPredicate::ObjectInReceptacle;
  gc.object = ObjectClass("Apple");
  gc.receptacle = ObjectClass("GarbageCan");
  task.goal_conditions.push_back(gc);
  return task;
}

// Random corpus with some duplicated instruction texts so distance ties are
// exercised.
inline std::vector<TaskInstance> random_corpus(std::mt19937_64& gen,
                                               const ObjectVocabulary& vocab,
                                               std::size_t size) {
  static const char* words[] = {"cook",  "wash",   "potato", "apple", "lamp",  "put",
                                "table", "fridge", "clean",  "slice", "bread", "mug"};
  std::vector<TaskInstance> corpus;
  for (std::size_t i = 0; i < size; ++i) {
    std::string goal;
    const std::size_t n_words = 2 + uniform_below(gen, 5);
    for (std::size_t w = 0; w < n_words; ++w) {
      if (w > 0) goal += ' ';
      goal += words[uniform_below(gen, std::size(words))];
    }
    char id[16];
    std::snprintf(id, sizeof(id), "c%04zu", i);
    corpus.push_back(simple_task(id, TaskType::PickAndPlace, goal,
                                 random_plan(gen, vocab, 1, 4)));
  }
  // Duplicate a few instructions to force exact distance ties.
  for (std::size_t i = 3; i + 1 < corpus.size(); i += 7) {
    corpus[i + 1].instruction.goal = corpus[i].instruction.goal;
  }
  return corpus;
}

// Brute-force kNN oracle: full sort by (distance, id), take k, most similar
// last. Kept independent of the retriever implementation.
inline std::vector<std::string> brute_force_knn_ids(const Instruction& query,
                                                    const std::vector<TaskInstance>& corpus,
                                                    std::size_t k,
                                                    const EmbeddingProvider& provider,
                                                    bool use_steps = false) {
  const EmbeddingVector q = provider.embed(instruction_text(query, use_steps));
  std::vector<std::pair<double, std::string>> scored;
  for (const TaskInstance& task : corpus) {
    const EmbeddingVector v = provider.embed(instruction_text(task.instruction, use_steps));
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      sum += (q[i] - v[i]) * (q[i] - v[i]);
    }
    scored.emplace_back(std::sqrt(sum), task.id);
  }
  std::sort(scored.begin(), scored.end());
  scored.resize(std::min(k, scored.size()));
  std::vector<std::string> ids;
  for (auto it = scored.rbegin(); it != scored.rend(); ++it) ids.push_back(it->second);
  return ids;
}

// Connected random grid: start from an open room and add random interior
// walls only where they keep the floor connected.
inline Scene random_scene(std::mt19937_64& gen, const ObjectVocabulary& vocab, int height,
                          int width) {
  std::vector<std::string> grid(static_cast<std::size_t>(height),
                                std::string(static_cast<std::size_t>(width), '.'));
  for (int c = 0; c < width; ++c) {
    grid[0][static_cast<std::size_t>(c)] = '#';
    grid[static_cast<std::size_t>(height - 1)][static_cast<std::size_t>(c)] = '#';
  }
  for (int r = 0; r < height; ++r) {
    grid[static_cast<std::size_t>(r)][0] = '#';
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(width - 1)] = '#';
  }

  auto connected = [&]() {
    Cell start{-1, -1};
    int open = 0;
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '.') {
          ++open;
          if (start.row < 0) start = {r, c};
        }
      }
    }
    if (open == 0) return false;
    std::set<Cell> seen{start};
    std::vector<Cell> stack{start};
    while (!stack.empty()) {
      const Cell cur = stack.back();
      stack.pop_back();
      const Cell around[4] = {{cur.row - 1, cur.col},
                              {cur.row + 1, cur.col},
                              {cur.row, cur.col - 1},
                              {cur.row, cur.col + 1}};
      for (const Cell& next : around) {
        if (next.row < 0 || next.row >= height || next.col < 0 || next.col >= width) continue;
        if (grid[static_cast<std::size_t>(next.row)][static_cast<std::size_t>(next.col)] !=
            '.') {
          continue;
        }
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    return static_cast<int>(seen.size()) == open;
  };

  const int wall_attempts = (height * width) / 6;
  for (int i = 0; i < wall_attempts; ++i) {
    const int r = 1 + static_cast<int>(uniform_below(gen, height - 2));
    const int c = 1 + static_cast<int>(uniform_below(gen, width - 2));
    auto& cell = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    if (cell != '.') continue;
    cell = '#';
    if (!connected()) cell = '.';
  }

  std::vector<Cell> open_cells;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '.') {
        open_cells.push_back({r, c});
      }
    }
  }

  nlohmann::json j;
  j["format"] = 1;
  j["id"] = "random";
  j["grid"] = grid;
  const Cell start = open_cells[uniform_below(gen, open_cells.size())];
  j["agent"] = {{"row", start.row}, {"col", start.col}, {"facing", "N"}};

  static const char* classes[] = {"Potato", "Apple", "Mug",    "Knife",  "GarbageCan",
                                  "Fridge", "Box",   "Faucet", "SinkBasin", "DeskLamp",
                                  "Plate",  "Microwave"};
  nlohmann::json objects = nlohmann::json::array();
  const std::size_t n_objects = 4 + uniform_below(gen, 6);
  for (std::size_t i = 0; i < n_objects; ++i) {
    const Cell cell = open_cells[uniform_below(gen, open_cells.size())];
    char id[16];
    std::snprintf(id, sizeof(id), "o%02zu", i);
    objects.push_back({{"id", id},
                       {"class", classes[uniform_below(gen, std::size(classes))]},
                       {"row", cell.row},
                       {"col", cell.col}});
  }
  j["objects"] = objects;
  return scene_from_json(j, vocab);
}

// Deterministic chaotic backend: parses the test goal out of the prompt and
// answers with a pseudo-random (often unhelpful) plan keyed on the prompt
// bytes. Exercises failure and re-plan paths.
class ChaosBackend : public LLMBackend {
 public:
  ChaosBackend(const ObjectVocabulary& vocab, std::uint64_t seed)
      : vocab_(vocab), seed_(seed) {}

  std::string complete(const CompletionRequest& req) override {
    std::mt19937_64 gen(mix64(seed_ ^ fnv1a64(req.prompt)));
    const HighLevelPlan plan = random_plan(gen, vocab_, 1, 5);
    return serialize_hlp(plan);
  }
  bool deterministic() const override { return true; }

 private:
  ObjectVocabulary vocab_;
  std::uint64_t seed_;
};

// Independent replay of the re-plan trigger rule over a trace's event
// stream: a re-plan must appear exactly when an action failure (or
// low-level give-up) occurred or when `n` executed steps passed with no
// subgoal completion. Returns an empty string when the trace conforms, else
// a description of the first violation.
inline std::string verify_replan_triggers(const EpisodeTrace& trace, int n, bool dynamic,
                                          int max_replans, int max_failures) {
  if (!dynamic) {
    for (const TraceEvent& e : trace.events) {
      if (e.kind == TraceEvent::Kind::Replan) return "replan event in static mode";
    }
    return "";
  }
  int counter = 0;
  bool pending_failure = false;  // a failure just happened, replan expected
  int replans = 0;
  int failures = 0;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    switch (e.kind) {
      case TraceEvent::Kind::Observe:
        continue;
      case TraceEvent::Kind::Plan:
        counter = 0;
        break;
      case TraceEvent::Kind::SubgoalDone:
        if (pending_failure) return "failure not followed by replan (subgoal done)";
        counter = 0;
        break;
      case TraceEvent::Kind::SubgoalFailed:
        ++failures;
        if (failures >= max_failures) return "";  // episode ends instead
        pending_failure = true;
        break;
      case TraceEvent::Kind::Action:
        if (pending_failure) return "failure not followed by replan (action)";
        if (!e.success) {
          ++failures;
          if (failures >= max_failures) return "";
          pending_failure = true;
        } else {
          ++counter;
        }
        break;
      case TraceEvent::Kind::Replan: {
        ++replans;
        const bool interval_due = counter >= n;
        if (e.detail == "ActionFailure") {
          if (!pending_failure) return "ActionFailure replan without failure";
        } else if (e.detail == "Interval") {
          if (!interval_due) return "Interval replan before n steps";
        } else {
          return "replan with unknown reason: " + e.detail;
        }
        pending_failure = false;
        counter = 0;
        break;
      }
    }
    if (e.kind == TraceEvent::Kind::Action && e.success && counter >= n) {
      // An interval trigger is due; the next non-observe event must be a
      // replan unless the episode ends here.
      std::size_t j = i + 1;
      while (j < trace.events.size() && trace.events[j].kind == TraceEvent::Kind::Observe) {
        ++j;
      }
      if (j < trace.events.size() && replans < max_replans) {
        if (trace.events[j].kind != TraceEvent::Kind::Replan) {
          return "interval trigger without replan";
        }
      }
    }
  }
  return "";
}

}  // namespace hlplan::testing
