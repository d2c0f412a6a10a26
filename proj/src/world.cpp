#include "hlplan/world.hpp"

#include <algorithm>

#include "hlplan/rng.hpp"

namespace hlplan {
namespace {

// Bresenham line; blocked intermediate cells break sight. Endpoints are
// exempt so furniture on a blocked cell is itself visible.
bool line_of_sight(const Scene& scene, Cell a, Cell b) {
  int x0 = a.col, y0 = a.row;
  const int x1 = b.col, y1 = b.row;
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    const Cell cur{y0, x0};
    if (cur != a && cur != b && !scene.walkable(cur)) return false;
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
  return true;
}

double noise_u01(std::uint64_t seed, int t, const std::string& id) {
  const std::uint64_t h =
      mix64(seed ^ mix64(fnv1a64(id)) ^ static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ull);
  return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);
}

ActionOutcome fail(FailReason reason) { return ActionOutcome{false, reason}; }
ActionOutcome success() { return ActionOutcome{true, FailReason::None}; }

}  // namespace

std::string_view primitive_kind_name(PrimitiveAction::Kind kind) {
  switch (kind) {
    case PrimitiveAction::Kind::MoveAhead: return "MoveAhead";
    case PrimitiveAction::Kind::RotateLeft: return "RotateLeft";
    case PrimitiveAction::Kind::RotateRight: return "RotateRight";
    case PrimitiveAction::Kind::Pickup: return "Pickup";
    case PrimitiveAction::Kind::Put: return "Put";
    case PrimitiveAction::Kind::Open: return "Open";
    case PrimitiveAction::Kind::Close: return "Close";
    case PrimitiveAction::Kind::ToggleOn: return "ToggleOn";
    case PrimitiveAction::Kind::ToggleOff: return "ToggleOff";
    case PrimitiveAction::Kind::Slice: return "Slice";
  }
  return "?";
}

nlohmann::json primitive_to_json(const PrimitiveAction& a) {
  nlohmann::json j;
  j["type"] = std::string(primitive_kind_name(a.kind));
  if (!a.target.empty()) j["target"] = a.target;
  return j;
}

std::string_view fail_reason_name(FailReason reason) {
  switch (reason) {
    case FailReason::None: return "None";
    case FailReason::Blocked: return "Blocked";
    case FailReason::UnknownObject: return "UnknownObject";
    case FailReason::OutOfReach: return "OutOfReach";
    case FailReason::InventoryFull: return "InventoryFull";
    case FailReason::NotPickupable: return "NotPickupable";
    case FailReason::ContainedInClosed: return "ContainedInClosed";
    case FailReason::InventoryEmpty: return "InventoryEmpty";
    case FailReason::NotAReceptacle: return "NotAReceptacle";
    case FailReason::ReceptacleClosed: return "ReceptacleClosed";
    case FailReason::ContainmentCycle: return "ContainmentCycle";
    case FailReason::NotOpenable: return "NotOpenable";
    case FailReason::AlreadyOpen: return "AlreadyOpen";
    case FailReason::AlreadyClosed: return "AlreadyClosed";
    case FailReason::NotToggleable: return "NotToggleable";
    case FailReason::AlreadyOn: return "AlreadyOn";
    case FailReason::AlreadyOff: return "AlreadyOff";
    case FailReason::NotSliceable: return "NotSliceable";
    case FailReason::AlreadySliced: return "AlreadySliced";
    case FailReason::NoKnife: return "NoKnife";
  }
  return "?";
}

WorldState::WorldState(const Scene& scene, std::uint64_t seed)
    : agent(scene.agent_start), objects(scene.objects), scene_(&scene), seed_(seed) {}

ObjectInstance* WorldState::find(const std::string& id) {
  for (ObjectInstance& obj : objects) {
    if (obj.id == id) return &obj;
  }
  return nullptr;
}

const ObjectInstance* WorldState::find(const std::string& id) const {
  for (const ObjectInstance& obj : objects) {
    if (obj.id == id) return &obj;
  }
  return nullptr;
}

Cell WorldState::effective_cell(const ObjectInstance& obj) const {
  const ObjectInstance* current = &obj;
  while (true) {
    if (held(*current)) return agent.cell;
    if (!current->inside_of) return current->position;
    const ObjectInstance* parent = find(*current->inside_of);
    if (parent == nullptr) return current->position;
    current = parent;
  }
}

bool WorldState::inside_closed_container(const ObjectInstance& obj) const {
  const ObjectInstance* current = &obj;
  while (current->inside_of) {
    const ObjectInstance* parent = find(*current->inside_of);
    if (parent == nullptr) break;
    if (parent->flags.openable && !parent->flags.open) return true;
    current = parent;
  }
  return false;
}

bool WorldState::held(const ObjectInstance& obj) const {
  return inventory && *inventory == obj.id;
}

ActionOutcome step(WorldState& state, const PrimitiveAction& action) {
  switch (action.kind) {
    case PrimitiveAction::Kind::MoveAhead: {
      const Cell next = step_from(state.agent.cell, state.agent.facing);
      if (!state.scene().walkable(next)) return fail(FailReason::Blocked);
      state.agent.cell = next;
      ++state.t;
      return success();
    }
    case PrimitiveAction::Kind::RotateLeft:
      state.agent.facing = rotate_left(state.agent.facing);
      ++state.t;
      return success();
    case PrimitiveAction::Kind::RotateRight:
      state.agent.facing = rotate_right(state.agent.facing);
      ++state.t;
      return success();
    default:
      break;
  }

  ObjectInstance* obj = state.find(action.target);
  if (obj == nullptr) return fail(FailReason::UnknownObject);

  // Interactions need the target in the faced cell or on the agent's own
  // cell.
  const Cell eff = state.effective_cell(*obj);
  const Cell faced = step_from(state.agent.cell, state.agent.facing);
  if (eff != faced && eff != state.agent.cell) return fail(FailReason::OutOfReach);

  switch (action.kind) {
    case PrimitiveAction::Kind::Pickup: {
      if (!obj->flags.pickupable) return fail(FailReason::NotPickupable);
      if (state.inside_closed_container(*obj)) return fail(FailReason::ContainedInClosed);
      if (state.inventory) return fail(FailReason::InventoryFull);
      if (obj->inside_of) {
        ObjectInstance* parent = state.find(*obj->inside_of);
        if (parent != nullptr) {
          auto& contents = parent->container_of;
          contents.erase(std::remove(contents.begin(), contents.end(), obj->id),
                         contents.end());
        }
        obj->inside_of = std::nullopt;
      }
      obj->position = state.agent.cell;
      state.inventory = obj->id;
      ++state.t;
      return success();
    }
    case PrimitiveAction::Kind::Put: {
      if (!state.inventory) return fail(FailReason::InventoryEmpty);
      if (!obj->flags.is_receptacle) return fail(FailReason::NotAReceptacle);
      if (obj->id == *state.inventory) return fail(FailReason::ContainmentCycle);
      if (obj->flags.openable && !obj->flags.open) return fail(FailReason::ReceptacleClosed);
      // Putting the held object under its own contents would loop the
      // containment chain.
      for (const ObjectInstance* cur = obj; cur->inside_of;) {
        if (*cur->inside_of == *state.inventory) return fail(FailReason::ContainmentCycle);
        const ObjectInstance* parent = state.find(*cur->inside_of);
        if (parent == nullptr) break;
        cur = parent;
      }
      ObjectInstance* held = state.find(*state.inventory);
      held->inside_of = obj->id;
      held->position = state.effective_cell(*obj);
      obj->container_of.push_back(held->id);
      state.inventory = std::nullopt;
      ++state.t;
      return success();
    }
    case PrimitiveAction::Kind::Open: {
      if (!obj->flags.openable) return fail(FailReason::NotOpenable);
      if (obj->flags.open) return fail(FailReason::AlreadyOpen);
      obj->flags.open = true;
      if (obj->object_class.name() == "Fridge") {
        // Contents chill over a closed-to-open cycle.
        for (const std::string& id : obj->container_of) {
          if (ObjectInstance* inner = state.find(id)) inner->flags.cooled = true;
        }
      }
      ++state.t;
      return success();
    }
    case PrimitiveAction::Kind::Close: {
      if (!obj->flags.openable) return fail(FailReason::NotOpenable);
      if (!obj->flags.open) return fail(FailReason::AlreadyClosed);
      obj->flags.open = false;
      ++state.t;
      return success();
    }
    case PrimitiveAction::Kind::ToggleOn: {
      if (!obj->flags.toggleable) return fail(FailReason::NotToggleable);
      if (obj->flags.on) return fail(FailReason::AlreadyOn);
      obj->flags.on = true;
      ++state.t;
      return success();
    }
    case PrimitiveAction::Kind::ToggleOff: {
      if (!obj->flags.toggleable) return fail(FailReason::NotToggleable);
      if (!obj->flags.on) return fail(FailReason::AlreadyOff);
      obj->flags.on = false;
      if (obj->object_class.name() == "Microwave") {
        for (const std::string& id : obj->container_of) {
          if (ObjectInstance* inner = state.find(id)) inner->flags.heated = true;
        }
      } else if (obj->object_class.name() == "Faucet") {
        // Running water cleans whatever sits in adjacent sink basins.
        for (ObjectInstance& sink : state.objects) {
          if (sink.object_class.name() != "SinkBasin") continue;
          if (chebyshev(sink.position, obj->position) > 1) continue;
          for (const std::string& id : sink.container_of) {
            if (ObjectInstance* inner = state.find(id)) inner->flags.cleaned = true;
          }
        }
      }
      ++state.t;
      return success();
    }
    case PrimitiveAction::Kind::Slice: {
      if (!obj->flags.sliceable) return fail(FailReason::NotSliceable);
      if (obj->flags.sliced) return fail(FailReason::AlreadySliced);
      const ObjectInstance* held =
          state.inventory ? state.find(*state.inventory) : nullptr;
      if (held == nullptr || held->object_class.name() != "Knife") {
        return fail(FailReason::NoKnife);
      }
      obj->flags.sliced = true;
      ++state.t;
      return success();
    }
    default:
      return fail(FailReason::UnknownObject);
  }
}

Observation observe(const WorldState& state, int radius, const DetectionNoise& noise) {
  Observation obs;
  obs.agent = state.agent;
  const Cell origin = state.agent.cell;
  for (int r = origin.row - radius; r <= origin.row + radius; ++r) {
    for (int c = origin.col - radius; c <= origin.col + radius; ++c) {
      const Cell cell{r, c};
      if (!state.scene().in_bounds(cell)) continue;
      if (!line_of_sight(state.scene(), origin, cell)) continue;
      obs.visible_cells.push_back(cell);
    }
  }
  for (const ObjectInstance& obj : state.objects) {
    if (state.held(obj)) continue;
    if (state.inside_closed_container(obj)) continue;
    const Cell cell = state.effective_cell(obj);
    if (chebyshev(origin, cell) > radius) continue;
    if (!line_of_sight(state.scene(), origin, cell)) continue;
    if (noise.p_fn > 0.0 && noise_u01(state.seed(), state.t, obj.id) < noise.p_fn) {
      continue;
    }
    obs.objects.push_back(VisibleObject{obj.id, obj.object_class, cell, obj.flags.open,
                                        obj.flags.on, obj.flags.sliced});
  }
  return obs;
}

namespace {

bool in_receptacle_of_class(const WorldState& state, const ObjectInstance& obj,
                            const ObjectClass& recep_class) {
  const ObjectInstance* current = &obj;
  while (current->inside_of) {
    const ObjectInstance* parent = state.find(*current->inside_of);
    if (parent == nullptr) return false;
    if (parent->object_class == recep_class) return true;
    current = parent;
  }
  return false;
}

bool condition_holds(const WorldState& state, const GoalCondition& gc) {
  switch (gc.predicate) {
    case GoalPredicate::ObjectInReceptacle:
      for (const ObjectInstance& obj : state.objects) {
        if (obj.object_class == gc.object &&
            in_receptacle_of_class(state, obj, *gc.receptacle)) {
          return true;
        }
      }
      return false;
    case GoalPredicate::ObjectSliced:
    case GoalPredicate::ObjectHeated:
    case GoalPredicate::ObjectCooled:
    case GoalPredicate::ObjectCleaned:
    case GoalPredicate::ObjectToggledOn:
      for (const ObjectInstance& obj : state.objects) {
        if (obj.object_class != gc.object) continue;
        switch (gc.predicate) {
          case GoalPredicate::ObjectSliced:
            if (obj.flags.sliced) return true;
            break;
          case GoalPredicate::ObjectHeated:
            if (obj.flags.heated) return true;
            break;
          case GoalPredicate::ObjectCooled:
            if (obj.flags.cooled) return true;
            break;
          case GoalPredicate::ObjectCleaned:
            if (obj.flags.cleaned) return true;
            break;
          case GoalPredicate::ObjectToggledOn:
            if (obj.flags.on) return true;
            break;
          default:
            break;
        }
      }
      return false;
    case GoalPredicate::TwoObjectsInReceptacle: {
      int count = 0;
      for (const ObjectInstance& obj : state.objects) {
        if (obj.object_class == gc.object &&
            in_receptacle_of_class(state, obj, *gc.receptacle)) {
          ++count;
        }
      }
      return count >= 2;
    }
    case GoalPredicate::ObjectExaminedUnderLamp: {
      if (!state.inventory) return false;
      const ObjectInstance* held = state.find(*state.inventory);
      if (held == nullptr || held->object_class != gc.object) return false;
      for (const ObjectInstance& obj : state.objects) {
        if (is_lamp_class(obj.object_class) && obj.flags.on) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace

GoalCheck check_goal(const WorldState& state, std::span<const GoalCondition> conditions) {
  GoalCheck result;
  result.total = static_cast<int>(conditions.size());
  for (const GoalCondition& gc : conditions) {
    if (condition_holds(state, gc)) ++result.satisfied;
  }
  // A task with no conditions cannot vacuously succeed; empty lists are
  // rejected at load time anyway.
  result.success = result.total > 0 && result.satisfied == result.total;
  return result;
}

nlohmann::json serialize_state(const WorldState& state) {
  nlohmann::json j;
  j["agent"] = {{"row", state.agent.cell.row},
                {"col", state.agent.cell.col},
                {"facing", std::string(facing_name(state.agent.facing))}};
  j["inventory"] = state.inventory ? nlohmann::json(*state.inventory) : nlohmann::json();
  j["t"] = state.t;
  std::vector<const ObjectInstance*> sorted;
  sorted.reserve(state.objects.size());
  for (const ObjectInstance& obj : state.objects) sorted.push_back(&obj);
  std::sort(sorted.begin(), sorted.end(),
            [](const ObjectInstance* a, const ObjectInstance* b) { return a->id < b->id; });
  nlohmann::json objects = nlohmann::json::array();
  for (const ObjectInstance* obj : sorted) {
    nlohmann::json o;
    o["id"] = obj->id;
    o["class"] = obj->object_class.name();
    o["row"] = obj->position.row;
    o["col"] = obj->position.col;
    o["inside"] = obj->inside_of ? nlohmann::json(*obj->inside_of) : nlohmann::json();
    o["contents"] = obj->container_of;
    o["open"] = obj->flags.open;
    o["on"] = obj->flags.on;
    o["sliced"] = obj->flags.sliced;
    o["heated"] = obj->flags.heated;
    o["cooled"] = obj->flags.cooled;
    o["cleaned"] = obj->flags.cleaned;
    objects.push_back(std::move(o));
  }
  j["objects"] = objects;
  return j;
}

}  // namespace hlplan
