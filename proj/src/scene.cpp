#include "hlplan/scene.hpp"

#include <fstream>
#include <map>
#include <set>

namespace hlplan {

std::string_view facing_name(Facing f) {
  switch (f) {
    case Facing::North: return "N";
    case Facing::East: return "E";
    case Facing::South: return "S";
    case Facing::West: return "W";
  }
  return "?";
}

std::optional<Facing> parse_facing(std::string_view token) {
  const std::string t = to_lower(trim(token));
  if (t == "n" || t == "north") return Facing::North;
  if (t == "e" || t == "east") return Facing::East;
  if (t == "s" || t == "south") return Facing::South;
  if (t == "w" || t == "west") return Facing::West;
  return std::nullopt;
}

Facing rotate_left(Facing f) {
  switch (f) {
    case Facing::North: return Facing::West;
    case Facing::West: return Facing::South;
    case Facing::South: return Facing::East;
    case Facing::East: return Facing::North;
  }
  return f;
}

Facing rotate_right(Facing f) {
  switch (f) {
    case Facing::North: return Facing::East;
    case Facing::East: return Facing::South;
    case Facing::South: return Facing::West;
    case Facing::West: return Facing::North;
  }
  return f;
}

Cell step_from(Cell c, Facing f) {
  switch (f) {
    case Facing::North: return {c.row - 1, c.col};
    case Facing::South: return {c.row + 1, c.col};
    case Facing::East: return {c.row, c.col + 1};
    case Facing::West: return {c.row, c.col - 1};
  }
  return c;
}

int chebyshev(Cell a, Cell b) {
  return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
}

nlohmann::json scene_to_json(const Scene& scene) {
  nlohmann::json j;
  j["format"] = 1;
  j["id"] = scene.id;
  j["grid"] = scene.grid;
  j["agent"] = {{"row", scene.agent_start.cell.row},
                {"col", scene.agent_start.cell.col},
                {"facing", std::string(facing_name(scene.agent_start.facing))}};
  nlohmann::json objects = nlohmann::json::array();
  for (const ObjectInstance& obj : scene.objects) {
    nlohmann::json o;
    o["id"] = obj.id;
    o["class"] = obj.object_class.name();
    o["row"] = obj.position.row;
    o["col"] = obj.position.col;
    if (obj.inside_of) o["inside"] = *obj.inside_of;
    if (obj.flags.open) o["open"] = true;
    if (obj.flags.on) o["on"] = true;
    if (obj.flags.sliced) o["sliced"] = true;
    if (obj.flags.heated) o["heated"] = true;
    if (obj.flags.cooled) o["cooled"] = true;
    if (obj.flags.cleaned) o["cleaned"] = true;
    objects.push_back(std::move(o));
  }
  j["objects"] = objects;
  return j;
}

Scene scene_from_json(const nlohmann::json& j, const ObjectVocabulary& vocab) {
  if (!j.contains("format") || j.at("format").get<int>() != 1) {
    throw SceneError("unsupported scene format");
  }
  Scene scene;
  scene.id = j.at("id").get<std::string>();
  scene.grid = j.at("grid").get<std::vector<std::string>>();
  const nlohmann::json& agent = j.at("agent");
  scene.agent_start.cell = {agent.at("row").get<int>(), agent.at("col").get<int>()};
  const auto facing = parse_facing(agent.at("facing").get<std::string>());
  if (!facing) throw SceneError("bad agent facing");
  scene.agent_start.facing = *facing;

  std::map<std::string, Cell> positions;
  std::vector<bool> has_position;
  for (const nlohmann::json& o : j.at("objects")) {
    ObjectInstance obj;
    obj.id = o.at("id").get<std::string>();
    const std::string class_str = o.at("class").get<std::string>();
    const auto cls = vocab.resolve(class_str);
    if (!cls) throw SceneError("unknown object class: " + class_str);
    obj.object_class = *cls;
    const ObjectTraits& traits = vocab.traits(*cls);
    obj.flags.pickupable = traits.pickupable;
    obj.flags.openable = traits.openable;
    obj.flags.toggleable = traits.toggleable;
    obj.flags.sliceable = traits.sliceable;
    obj.flags.is_receptacle = traits.receptacle;
    if (o.contains("open")) obj.flags.open = o.at("open").get<bool>();
    if (o.contains("on")) obj.flags.on = o.at("on").get<bool>();
    if (o.contains("sliced")) obj.flags.sliced = o.at("sliced").get<bool>();
    if (o.contains("heated")) obj.flags.heated = o.at("heated").get<bool>();
    if (o.contains("cooled")) obj.flags.cooled = o.at("cooled").get<bool>();
    if (o.contains("cleaned")) obj.flags.cleaned = o.at("cleaned").get<bool>();
    if (o.contains("inside") && !o.at("inside").is_null()) {
      obj.inside_of = o.at("inside").get<std::string>();
    }
    const bool own_position = o.contains("row") && o.contains("col");
    if (own_position) {
      obj.position = {o.at("row").get<int>(), o.at("col").get<int>()};
    } else if (!obj.inside_of) {
      throw SceneError("object " + obj.id + " has no position");
    }
    has_position.push_back(own_position);
    positions[obj.id] = obj.position;
    scene.objects.push_back(std::move(obj));
  }

  // Contained objects may omit their position; they sit at their
  // container's cell.
  for (std::size_t i = 0; i < scene.objects.size(); ++i) {
    ObjectInstance& obj = scene.objects[i];
    if (!has_position[i] && obj.inside_of && positions.count(*obj.inside_of)) {
      obj.position = positions[*obj.inside_of];
      positions[obj.id] = obj.position;
    }
  }

  // Derive container_of from inside_of.
  std::map<std::string, std::vector<std::string>> contents;
  for (const ObjectInstance& obj : scene.objects) {
    if (obj.inside_of) contents[*obj.inside_of].push_back(obj.id);
  }
  for (ObjectInstance& obj : scene.objects) {
    auto it = contents.find(obj.id);
    if (it != contents.end()) obj.container_of = it->second;
  }

  validate_scene(scene, vocab);
  return scene;
}

Scene load_scene(const std::filesystem::path& path, const ObjectVocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SceneError("bad scene JSON in " + path.string() + ": " + e.what());
  }
  return scene_from_json(j, vocab);
}

void save_scene(const std::filesystem::path& path, const Scene& scene) {
  std::ofstream out(path);
  if (!out) throw SceneError("cannot write scene file: " + path.string());
  out << scene_to_json(scene).dump(2) << '\n';
}

void validate_scene(const Scene& scene, const ObjectVocabulary& vocab) {
  if (scene.grid.empty()) throw SceneError("empty grid");
  for (const std::string& row : scene.grid) {
    if (static_cast<int>(row.size()) != scene.width()) {
      throw SceneError("grid rows have unequal widths");
    }
    for (char c : row) {
      if (c != '#' && c != '.') throw SceneError("grid cells must be '#' or '.'");
    }
  }
  if (!scene.walkable(scene.agent_start.cell)) {
    throw SceneError("agent start must be walkable");
  }

  std::set<std::string> ids;
  std::map<std::string, const ObjectInstance*> by_id;
  for (const ObjectInstance& obj : scene.objects) {
    if (!ids.insert(obj.id).second) throw SceneError("duplicate object id: " + obj.id);
    if (!vocab.contains(obj.object_class)) {
      throw SceneError("unknown object class: " + obj.object_class.name());
    }
    if (!scene.in_bounds(obj.position)) {
      throw SceneError("object " + obj.id + " is out of bounds");
    }
    if (obj.flags.open && !obj.flags.openable) {
      throw SceneError("object " + obj.id + " is open but not openable");
    }
    by_id[obj.id] = &obj;
  }
  for (const ObjectInstance& obj : scene.objects) {
    if (!obj.inside_of) continue;
    auto it = by_id.find(*obj.inside_of);
    if (it == by_id.end()) {
      throw SceneError("object " + obj.id + " is inside unknown object " + *obj.inside_of);
    }
    if (!it->second->flags.is_receptacle) {
      throw SceneError("object " + obj.id + " is inside a non-receptacle");
    }
    // Containment chains must terminate.
    std::set<std::string> seen{obj.id};
    const ObjectInstance* current = it->second;
    while (current->inside_of) {
      if (!seen.insert(current->id).second) {
        throw SceneError("containment cycle at " + current->id);
      }
      auto next = by_id.find(*current->inside_of);
      if (next == by_id.end()) {
        throw SceneError("broken containment chain at " + current->id);
      }
      current = next->second;
    }
  }
}

void validate_task_against_scene(const TaskInstance& task, const Scene& scene) {
  if (task.scene_id != scene.id) {
    throw SceneError("task " + task.id + " references scene " + task.scene_id +
                     " but got " + scene.id);
  }
  auto count_class = [&](const ObjectClass& c) {
    std::size_t n = 0;
    for (const ObjectInstance& obj : scene.objects) {
      if (obj.object_class == c) ++n;
    }
    return n;
  };
  for (const GoalCondition& gc : task.goal_conditions) {
    const std::size_t needed =
        gc.predicate == GoalPredicate::TwoObjectsInReceptacle ? 2 : 1;
    if (count_class(gc.object) < needed) {
      throw SceneError("scene " + scene.id + " cannot satisfy condition on " +
                       gc.object.name());
    }
    if (gc.receptacle && count_class(*gc.receptacle) < 1) {
      throw SceneError("scene " + scene.id + " has no " + gc.receptacle->name());
    }
    if (gc.predicate == GoalPredicate::ObjectExaminedUnderLamp) {
      bool has_lamp = false;
      for (const ObjectInstance& obj : scene.objects) {
        if (is_lamp_class(obj.object_class)) has_lamp = true;
      }
      if (!has_lamp) throw SceneError("scene " + scene.id + " has no lamp");
    }
  }
}

}  // namespace hlplan
