#include "hlplan/lowlevel.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace hlplan {
namespace {

constexpr int kNoPath = std::numeric_limits<int>::max();

int facing_index(Facing f) {
  switch (f) {
    case Facing::North: return 0;
    case Facing::East: return 1;
    case Facing::South: return 2;
    case Facing::West: return 3;
  }
  return 0;
}

const Facing kFacings[4] = {Facing::North, Facing::East, Facing::South, Facing::West};

// Shortest paths in (cell, facing) space; MoveAhead and rotations all cost
// one step.
struct PoseSearch {
  const Scene* scene;
  int width = 0, height = 0;
  std::vector<int> dist;
  std::vector<int> prev;         // predecessor pose index
  std::vector<PrimitiveAction::Kind> via;  // action taken into this pose

  int index(Cell c, int f) const { return (c.row * width + c.col) * 4 + f; }

  explicit PoseSearch(const Scene& s, Pose start) : scene(&s) {
    width = s.width();
    height = s.height();
    const std::size_t n = static_cast<std::size_t>(width) * height * 4;
    dist.assign(n, kNoPath);
    prev.assign(n, -1);
    via.assign(n, PrimitiveAction::Kind::MoveAhead);
    std::deque<int> queue;
    const int start_idx = index(start.cell, facing_index(start.facing));
    dist[static_cast<std::size_t>(start_idx)] = 0;
    queue.push_back(start_idx);
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      const int f = cur % 4;
      const int cell_idx = cur / 4;
      const Cell cell{cell_idx / width, cell_idx % width};
      const int d = dist[static_cast<std::size_t>(cur)];
      auto relax = [&](Cell nc, int nf, PrimitiveAction::Kind kind) {
        const int ni = index(nc, nf);
        if (dist[static_cast<std::size_t>(ni)] != kNoPath) return;
        dist[static_cast<std::size_t>(ni)] = d + 1;
        prev[static_cast<std::size_t>(ni)] = cur;
        via[static_cast<std::size_t>(ni)] = kind;
        queue.push_back(ni);
      };
      const Cell ahead = step_from(cell, kFacings[f]);
      if (scene->walkable(ahead)) relax(ahead, f, PrimitiveAction::Kind::MoveAhead);
      relax(cell, facing_index(rotate_left(kFacings[f])), PrimitiveAction::Kind::RotateLeft);
      relax(cell, facing_index(rotate_right(kFacings[f])), PrimitiveAction::Kind::RotateRight);
    }
  }

  // Cheapest pose from which `target` is the faced cell or the own cell.
  int best_goal_pose(Cell target, int* out_cost) const {
    int best = -1;
    int best_cost = kNoPath;
    auto consider = [&](Cell c, int f) {
      if (!scene->in_bounds(c) || !scene->walkable(c)) return;
      const int idx = index(c, f);
      const int d = dist[static_cast<std::size_t>(idx)];
      if (d < best_cost) {
        best_cost = d;
        best = idx;
      }
    };
    for (int f = 0; f < 4; ++f) {
      // Stand one cell away, facing the target.
      const Cell from = step_from(target, kFacings[(f + 2) % 4]);
      consider(from, f);
      // Or stand on the target cell itself.
      consider(target, f);
    }
    if (out_cost != nullptr) *out_cost = best_cost;
    return best_cost == kNoPath ? -1 : best;
  }

  // Cheapest pose standing on the cell (any facing).
  int best_occupy_pose(Cell target, int* out_cost) const {
    int best = -1;
    int best_cost = kNoPath;
    for (int f = 0; f < 4; ++f) {
      if (!scene->walkable(target)) break;
      const int idx = index(target, f);
      const int d = dist[static_cast<std::size_t>(idx)];
      if (d < best_cost) {
        best_cost = d;
        best = idx;
      }
    }
    if (out_cost != nullptr) *out_cost = best_cost;
    return best_cost == kNoPath ? -1 : best;
  }

  // First primitive on the shortest path to the goal pose.
  PrimitiveAction first_step(int goal_idx, Pose start) const {
    int cur = goal_idx;
    const int start_idx = index(start.cell, facing_index(start.facing));
    PrimitiveAction::Kind kind = via[static_cast<std::size_t>(cur)];
    while (prev[static_cast<std::size_t>(cur)] != start_idx) {
      cur = prev[static_cast<std::size_t>(cur)];
      kind = via[static_cast<std::size_t>(cur)];
    }
    return PrimitiveAction{kind, ""};
  }
};

bool interact_goal_satisfied(Pose pose, Cell target) {
  return step_from(pose.cell, pose.facing) == target || pose.cell == target;
}

std::optional<PrimitiveAction::Kind> interaction_kind(HighLevelAction a) {
  switch (a) {
    case HighLevelAction::PickupObject: return PrimitiveAction::Kind::Pickup;
    case HighLevelAction::PutObject: return PrimitiveAction::Kind::Put;
    case HighLevelAction::OpenObject: return PrimitiveAction::Kind::Open;
    case HighLevelAction::CloseObject: return PrimitiveAction::Kind::Close;
    case HighLevelAction::ToggleOnObject: return PrimitiveAction::Kind::ToggleOn;
    case HighLevelAction::ToggleOffObject: return PrimitiveAction::Kind::ToggleOff;
    case HighLevelAction::SliceObject: return PrimitiveAction::Kind::Slice;
    case HighLevelAction::Navigation: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

LowLevelPlanner::LowLevelPlanner(const Scene& scene, const ObjectVocabulary& vocab)
    : scene_(&scene), vocab_(&vocab) {}

void LowLevelPlanner::integrate(const Observation& obs, const AgentView& view) {
  visited_.insert(view.pose.cell);

  std::set<std::string> visible_ids;
  for (const VisibleObject& v : obs.objects) visible_ids.insert(v.id);

  // Negative evidence: a remembered object whose cell is in view but which
  // is no longer seen there has moved or been shut away.
  std::set<Cell> visible_cells(obs.visible_cells.begin(), obs.visible_cells.end());
  for (auto it = memory_.begin(); it != memory_.end();) {
    const bool gone = !visible_ids.count(it->first) && visible_cells.count(it->second.cell);
    const bool now_held = view.inventory_id && *view.inventory_id == it->first;
    if (gone || now_held) {
      it = memory_.erase(it);
    } else {
      ++it;
    }
  }
  for (const VisibleObject& v : obs.objects) {
    memory_[v.id] = Memory{v.object_class, v.cell, v.open, v.on, v.sliced};
  }
}

LowLevelDecision LowLevelPlanner::next_action(const Subgoal& subgoal, const Observation& obs,
                                              const AgentView& view) {
  integrate(obs, view);
  if (subgoal.action == HighLevelAction::Navigation) {
    return navigate(subgoal.object, view);
  }
  return interact(subgoal, view);
}

LowLevelDecision LowLevelPlanner::navigate(const ObjectClass& target, const AgentView& view) {
  PoseSearch search(*scene_, view.pose);

  std::string best_id;
  Cell best_cell{};
  int best_cost = kNoPath;
  int best_goal = -1;
  for (const auto& [id, mem] : memory_) {
    if (mem.object_class != target) continue;
    int cost = kNoPath;
    const int goal = search.best_goal_pose(mem.cell, &cost);
    if (goal < 0) continue;
    if (cost < best_cost || (cost == best_cost && id < best_id)) {
      best_cost = cost;
      best_id = id;
      best_cell = mem.cell;
      best_goal = goal;
    }
  }

  if (best_goal >= 0) {
    if (interact_goal_satisfied(view.pose, best_cell)) {
      return LowLevelDecision{LowLevelDecision::Kind::Done, {}, ""};
    }
    return LowLevelDecision{LowLevelDecision::Kind::Act,
                            search.first_step(best_goal, view.pose), ""};
  }
  return explore(view);
}

LowLevelDecision LowLevelPlanner::explore(const AgentView& view) {
  PoseSearch search(*scene_, view.pose);

  // Nearest unvisited reachable cell, ties by smallest (row, col); the
  // iteration order below is already row-major.
  Cell frontier{};
  int frontier_cost = kNoPath;
  bool found = false;
  int goal_idx = -1;
  for (int r = 0; r < scene_->height(); ++r) {
    for (int c = 0; c < scene_->width(); ++c) {
      const Cell cell{r, c};
      if (!scene_->walkable(cell) || visited_.count(cell)) continue;
      int cost = kNoPath;
      const int goal = search.best_occupy_pose(cell, &cost);
      if (goal < 0) continue;
      if (cost < frontier_cost) {
        frontier_cost = cost;
        frontier = cell;
        goal_idx = goal;
        found = true;
      }
    }
  }
  if (!found) {
    return LowLevelDecision{LowLevelDecision::Kind::Failed, {}, "Unreachable"};
  }
  (void)frontier;
  return LowLevelDecision{LowLevelDecision::Kind::Act, search.first_step(goal_idx, view.pose),
                          ""};
}

LowLevelDecision LowLevelPlanner::interact(const Subgoal& subgoal, const AgentView& view) {
  const auto kind = interaction_kind(subgoal.action);
  const Cell faced = step_from(view.pose.cell, view.pose.facing);

  std::vector<const std::pair<const std::string, Memory>*> adjacent;
  for (const auto& entry : memory_) {
    if (entry.second.object_class != subgoal.object) continue;
    if (entry.second.cell != faced && entry.second.cell != view.pose.cell) continue;
    adjacent.push_back(&entry);
  }
  if (adjacent.empty()) {
    return LowLevelDecision{LowLevelDecision::Kind::Failed, {}, "NotAtTarget"};
  }

  const ObjectTraits& traits = vocab_->traits(subgoal.object);
  const bool holding = view.inventory_id.has_value();
  const bool holding_knife =
      view.inventory_class && view.inventory_class->name() == "Knife";

  for (const auto* entry : adjacent) {
    const Memory& mem = entry->second;
    bool ok = false;
    switch (*kind) {
      case PrimitiveAction::Kind::Pickup:
        ok = traits.pickupable && !holding;
        break;
      case PrimitiveAction::Kind::Put:
        ok = traits.receptacle && holding && (!traits.openable || mem.open);
        break;
      case PrimitiveAction::Kind::Open:
        ok = traits.openable && !mem.open;
        break;
      case PrimitiveAction::Kind::Close:
        ok = traits.openable && mem.open;
        break;
      case PrimitiveAction::Kind::ToggleOn:
        ok = traits.toggleable && !mem.on;
        break;
      case PrimitiveAction::Kind::ToggleOff:
        ok = traits.toggleable && mem.on;
        break;
      case PrimitiveAction::Kind::Slice:
        ok = traits.sliceable && !mem.sliced && holding_knife;
        break;
      default:
        ok = false;
        break;
    }
    if (ok) {
      return LowLevelDecision{LowLevelDecision::Kind::Act,
                              PrimitiveAction{*kind, entry->first}, ""};
    }
  }
  return LowLevelDecision{LowLevelDecision::Kind::Failed, {}, "PreconditionViolated"};
}

std::string LowLevelPlanner::visited_ascii() const {
  std::string out;
  for (int r = 0; r < scene_->height(); ++r) {
    for (int c = 0; c < scene_->width(); ++c) {
      const Cell cell{r, c};
      if (!scene_->walkable(cell)) {
        out += '#';
      } else if (visited_.count(cell)) {
        out += '*';
      } else {
        out += '.';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace hlplan
