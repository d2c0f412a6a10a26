#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlplan/task.hpp"

namespace hlplan {

enum class Facing { North, East, South, West };

std::string_view facing_name(Facing f);                     // "N" "E" "S" "W"
std::optional<Facing> parse_facing(std::string_view token);
Facing rotate_left(Facing f);
Facing rotate_right(Facing f);

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// The grid cell one step ahead in the given direction.
Cell step_from(Cell c, Facing f);
int chebyshev(Cell a, Cell b);

struct Pose {
  Cell cell;
  Facing facing = Facing::North;
  auto operator<=>(const Pose&) const = default;
};

struct ObjectFlags {
  bool openable = false;
  bool open = false;
  bool toggleable = false;
  bool on = false;
  bool sliceable = false;
  bool sliced = false;
  bool pickupable = false;
  bool heated = false;
  bool cooled = false;
  bool cleaned = false;
  bool is_receptacle = false;
};

struct ObjectInstance {
  std::string id;
  ObjectClass object_class;
  Cell position;
  ObjectFlags flags;
  std::vector<std::string> container_of;
  std::optional<std::string> inside_of;
};

class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Static gridworld layout: '#' cells are blocked (walls and furniture),
// '.' cells are walkable. Furniture sits on blocked cells; items sit on
// walkable cells or inside receptacles.
struct Scene {
  std::string id;
  std::vector<std::string> grid;
  Pose agent_start;
  std::vector<ObjectInstance> objects;

  int height() const { return static_cast<int>(grid.size()); }
  int width() const { return grid.empty() ? 0 : static_cast<int>(grid[0].size()); }
  bool in_bounds(Cell c) const {
    return c.row >= 0 && c.row < height() && c.col >= 0 && c.col < width();
  }
  bool walkable(Cell c) const {
    return in_bounds(c) && grid[static_cast<std::size_t>(c.row)]
                               [static_cast<std::size_t>(c.col)] == '.';
  }
};

nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j, const ObjectVocabulary& vocab);

Scene load_scene(const std::filesystem::path& path, const ObjectVocabulary& vocab);
void save_scene(const std::filesystem::path& path, const Scene& scene);

// Structural checks: rectangular grid, walkable agent start, known classes,
// in-bounds positions, existing containment targets, acyclic containment.
void validate_scene(const Scene& scene, const ObjectVocabulary& vocab);

// Static satisfiability: every class a goal condition needs exists in the
// scene (two instances for the two-object predicate), and the task points
// at this scene.
void validate_task_against_scene(const TaskInstance& task, const Scene& scene);

}  // namespace hlplan
