#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlplan/scene.hpp"

namespace hlplan {

struct PrimitiveAction {
  enum class Kind {
    MoveAhead,
    RotateLeft,
    RotateRight,
    Pickup,
    Put,
    Open,
    Close,
    ToggleOn,
    ToggleOff,
    Slice,
  };
  Kind kind{};
  std::string target;  // object id for interactions, empty for motion

  static PrimitiveAction move_ahead() { return {Kind::MoveAhead, ""}; }
  static PrimitiveAction rotate_left() { return {Kind::RotateLeft, ""}; }
  static PrimitiveAction rotate_right() { return {Kind::RotateRight, ""}; }

  bool is_motion() const {
    return kind == Kind::MoveAhead || kind == Kind::RotateLeft || kind == Kind::RotateRight;
  }
  auto operator<=>(const PrimitiveAction&) const = default;
};

std::string_view primitive_kind_name(PrimitiveAction::Kind kind);
nlohmann::json primitive_to_json(const PrimitiveAction& a);

enum class FailReason {
  None,
  Blocked,
  UnknownObject,
  OutOfReach,
  InventoryFull,
  NotPickupable,
  ContainedInClosed,
  InventoryEmpty,
  NotAReceptacle,
  ReceptacleClosed,
  ContainmentCycle,
  NotOpenable,
  AlreadyOpen,
  AlreadyClosed,
  NotToggleable,
  AlreadyOn,
  AlreadyOff,
  NotSliceable,
  AlreadySliced,
  NoKnife,
};

std::string_view fail_reason_name(FailReason reason);

// Failures are data, not exceptions; a failed step leaves the world
// untouched.
struct ActionOutcome {
  bool success = true;
  FailReason reason = FailReason::None;
};

class WorldState {
 public:
  WorldState(const Scene& scene, std::uint64_t seed = 0);

  const Scene& scene() const { return *scene_; }
  std::uint64_t seed() const { return seed_; }

  Pose agent;
  std::optional<std::string> inventory;
  int t = 0;
  std::vector<ObjectInstance> objects;

  ObjectInstance* find(const std::string& id);
  const ObjectInstance* find(const std::string& id) const;

  // Where the object currently reports itself: the agent's cell when held,
  // the outermost container's cell when contained.
  Cell effective_cell(const ObjectInstance& obj) const;
  bool inside_closed_container(const ObjectInstance& obj) const;
  bool held(const ObjectInstance& obj) const;

 private:
  const Scene* scene_;
  std::uint64_t seed_;
};

ActionOutcome step(WorldState& state, const PrimitiveAction& action);

struct VisibleObject {
  std::string id;
  ObjectClass object_class;
  Cell cell;
  bool open = false;
  bool on = false;
  bool sliced = false;
};

struct DetectionNoise {
  double p_fn = 0.0;  // independent drop probability per visible object
};

struct Observation {
  Pose agent;
  std::vector<VisibleObject> objects;
  std::vector<Cell> visible_cells;  // cells within radius and line of sight
};

// Ground-truth visibility: objects within Chebyshev distance <= radius with
// line of sight not crossing blocked cells. Contents of closed containers
// and the held object are never reported. The noise model drops each
// visible object independently, seeded by (world seed, t, object id).
Observation observe(const WorldState& state, int radius, const DetectionNoise& noise = {});

struct GoalCheck {
  int satisfied = 0;
  int total = 0;
  bool success = false;
};

GoalCheck check_goal(const WorldState& state, std::span<const GoalCondition> conditions);

// Canonical JSON of the mutable world, used by determinism and
// failure-purity checks.
nlohmann::json serialize_state(const WorldState& state);

}  // namespace hlplan
