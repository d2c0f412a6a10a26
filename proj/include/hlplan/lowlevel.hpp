#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "hlplan/types.hpp"
#include "hlplan/world.hpp"

namespace hlplan {

// Proprioception the low-level planner may rely on, next to the camera
// observation.
struct AgentView {
  Pose pose;
  std::optional<std::string> inventory_id;
  std::optional<ObjectClass> inventory_class;
};

struct LowLevelDecision {
  enum class Kind { Act, Done, Failed };
  Kind kind{};
  PrimitiveAction action{};  // valid when kind == Act
  std::string reason;        // Unreachable | NotAtTarget | PreconditionViolated
};

// Maps one subgoal to primitive actions against the known static map and
// remembered object sightings.
//
// Navigation(X): when an instance of X has a remembered cell, emit the next
// step of a shortest path (BFS over pose space, rotations count) to an
// adjacent-and-facing pose, then Done. Otherwise walk to the nearest
// unvisited reachable cell (ties by smallest row, col) until X is sighted;
// Unreachable when no unvisited cell remains.
//
// Interaction (A, X): emit the interaction primitive against an
// adjacent-faced instance of X whose preconditions hold in the remembered
// view; NotAtTarget when no instance is adjacent.
class LowLevelPlanner {
 public:
  LowLevelPlanner(const Scene& scene, const ObjectVocabulary& vocab);

  LowLevelDecision next_action(const Subgoal& subgoal, const Observation& obs,
                               const AgentView& view);

  const std::set<Cell>& visited() const { return visited_; }
  std::string visited_ascii() const;  // debug dump for traces

 private:
  struct Memory {
    ObjectClass object_class;
    Cell cell;
    bool open = false;
    bool on = false;
    bool sliced = false;
  };

  void integrate(const Observation& obs, const AgentView& view);
  LowLevelDecision navigate(const ObjectClass& target, const AgentView& view);
  LowLevelDecision interact(const Subgoal& subgoal, const AgentView& view);
  LowLevelDecision explore(const AgentView& view);

  const Scene* scene_;
  const ObjectVocabulary* vocab_;
  std::map<std::string, Memory> memory_;
  std::set<Cell> visited_;
};

}  // namespace hlplan
