// Generates the bundled desk-scale suite under data/: scene files, the
// episode task suite, the retrieval/training corpus, and the grounding
// scenario family with its scripted rule table. Deterministic; re-running
// reproduces identical bytes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlplan/dataset.hpp"
#include "hlplan/parse.hpp"
#include "hlplan/scene.hpp"

using namespace hlplan;

namespace {

const ObjectVocabulary& vocab() {
  static const ObjectVocabulary v = household_vocabulary();
  return v;
}

struct Placement {
  std::string id;
  std::string cls;
  Cell cell;
  std::string inside;  // container id, empty for none
  bool open = false;
};

Scene build_scene(const std::string& id, const std::vector<std::string>& grid, Pose start,
                  const std::vector<Placement>& placements) {
  nlohmann::json j;
  j["format"] = 1;
  j["id"] = id;
  j["grid"] = grid;
  j["agent"] = {{"row", start.cell.row},
                {"col", start.cell.col},
                {"facing", std::string(facing_name(start.facing))}};
  nlohmann::json objects = nlohmann::json::array();
  for (const Placement& p : placements) {
    nlohmann::json o;
    o["id"] = p.id;
    o["class"] = p.cls;
    o["row"] = p.cell.row;
    o["col"] = p.cell.col;
    if (!p.inside.empty()) o["inside"] = p.inside;
    if (p.open) o["open"] = true;
    objects.push_back(std::move(o));
  }
  j["objects"] = objects;
  return scene_from_json(j, vocab());
}

// Floor cells used for item placement, rotated per scene variant so the
// layouts differ while staying solvable.
Cell pick_cell(const std::vector<Cell>& pool, std::set<Cell>& used, std::size_t index,
               int variant) {
  std::size_t at = (index * 3 + static_cast<std::size_t>(variant) * 5) % pool.size();
  for (std::size_t probe = 0; probe < pool.size(); ++probe) {
    const Cell c = pool[(at + probe) % pool.size()];
    if (used.insert(c).second) return c;
  }
  return pool[at % pool.size()];
}

Scene make_kitchen(int variant) {
  const std::vector<std::string> grid = {
      "##########",
      "##..#.##.#",  // Fridge(1,1) Microwave(1,4) SinkBasin(1,6) Faucet(1,7)
      "#........#",
      "#........#",
      "#.......##",  // Box(4,8)
      "#........#",
      "##..#..###",  // Cabinet(6,1) GarbageCan(6,4) CounterTop(6,7) DiningTable(6,8)
      "##########",
  };
  std::vector<Placement> placements = {
      {"fridge_1", "Fridge", {1, 1}, "", false},
      {"microwave_1", "Microwave", {1, 4}, "", false},
      {"sink_1", "SinkBasin", {1, 6}, "", false},
      {"faucet_1", "Faucet", {1, 7}, "", false},
      {"box_1", "Box", {4, 8}, "", false},
      {"cabinet_1", "Cabinet", {6, 1}, "", false},
      {"garbagecan_1", "GarbageCan", {6, 4}, "", false},
      {"counter_1", "CounterTop", {6, 7}, "", false},
      {"table_1", "DiningTable", {6, 8}, "", false},
  };
  const std::vector<Cell> pool = {
      {2, 2}, {2, 4}, {2, 6}, {2, 8}, {3, 1}, {3, 3}, {3, 5}, {3, 7}, {4, 2},
      {4, 4}, {4, 6}, {5, 1}, {5, 3}, {5, 5}, {5, 7}, {2, 1}, {3, 8}, {5, 8},
  };
  const std::vector<std::pair<std::string, std::string>> items = {
      {"potato_1", "Potato"}, {"apple_1", "Apple"},   {"bread_1", "Bread"},
      {"tomato_1", "Tomato"}, {"lettuce_1", "Lettuce"}, {"cup_1", "Cup"},
      {"mug_1", "Mug"},       {"plate_1", "Plate"},   {"knife_1", "Knife"},
      {"egg_1", "Egg"},       {"egg_2", "Egg"},
  };
  std::set<Cell> used{{3, 4}};  // keep the start cell clear
  for (std::size_t i = 0; i < items.size(); ++i) {
    placements.push_back(
        {items[i].first, items[i].second, pick_cell(pool, used, i, variant), "", false});
  }
  char name[32];
  std::snprintf(name, sizeof(name), "kitchen_%02d", variant);
  return build_scene(name, grid, Pose{{3, 4}, Facing::South}, placements);
}

Scene make_office(int variant) {
  const std::vector<std::string> grid = {
      "##########",
      "##.....###",  // Shelf(1,1) Desk(1,7) DeskLamp(1,8)
      "#........#",
      "#........#",
      "##.......#",  // Drawer(4,1)
      "#........#",
      "##..#..#.#",  // Box(6,1) GarbageCan(6,4) SideTable(6,7)
      "##########",
  };
  std::vector<Placement> placements = {
      {"shelf_1", "Shelf", {1, 1}, "", false},
      {"desk_1", "Desk", {1, 7}, "", false},
      {"desklamp_1", "DeskLamp", {1, 8}, "", false},
      {"drawer_1", "Drawer", {4, 1}, "", false},
      {"box_1", "Box", {6, 1}, "", false},
      {"garbagecan_1", "GarbageCan", {6, 4}, "", false},
      {"sidetable_1", "SideTable", {6, 7}, "", false},
  };
  const std::vector<Cell> pool = {
      {2, 2}, {2, 4}, {2, 6}, {2, 8}, {3, 1}, {3, 3}, {3, 5}, {3, 7},
      {4, 3}, {4, 5}, {4, 7}, {5, 2}, {5, 4}, {5, 6}, {5, 8}, {6, 8},
  };
  const std::vector<std::pair<std::string, std::string>> items = {
      {"book_1", "Book"},         {"creditcard_1", "CreditCard"},
      {"keychain_1", "KeyChain"}, {"watch_1", "Watch"},
      {"cellphone_1", "CellPhone"}, {"pencil_1", "Pencil"},
      {"pencil_2", "Pencil"},
  };
  std::set<Cell> used{{4, 5}};
  for (std::size_t i = 0; i < items.size(); ++i) {
    placements.push_back(
        {items[i].first, items[i].second, pick_cell(pool, used, i, variant), "", false});
  }
  char name[32];
  std::snprintf(name, sizeof(name), "office_%02d", variant);
  return build_scene(name, grid, Pose{{4, 5}, Facing::North}, placements);
}

Scene make_scenario_fridge() {
  const std::vector<std::string> grid = {
      "##########",
      "#....#..##",  // Fridge(1,8); divider wall at col 5
      "#....#...#",
      "#....#...#",
      "#....#...#",
      "#........#",
      "#.#......#",  // GarbageCan(6,2)
      "##########",
  };
  return build_scene("scenario_fridge", grid, Pose{{1, 1}, Facing::South},
                     {
                         {"fridge_1", "Fridge", {1, 8}, "", false},
                         {"garbagecan_1", "GarbageCan", {6, 2}, "", false},
                         {"potato_1", "Potato", {1, 8}, "fridge_1", false},
                     });
}

Scene make_scenario_cabinet() {
  const std::vector<std::string> grid = {
      "##########",
      "#....#..##",  // Cabinet(1,8)
      "#....#...#",
      "#....#...#",
      "#....#...#",
      "#........#",
      "#.....#..#",  // Desk(6,6)
      "##########",
  };
  return build_scene("scenario_cabinet", grid, Pose{{1, 1}, Facing::South},
                     {
                         {"cabinet_1", "Cabinet", {1, 8}, "", false},
                         {"desk_1", "Desk", {6, 6}, "", false},
                         {"cup_1", "Cup", {1, 8}, "cabinet_1", false},
                     });
}

Scene make_scenario_recyclebin() {
  const std::vector<std::string> grid = {
      "##########",
      "#........#",
      "#........#",
      "#........#",
      "#........#",
      "#........#",
      "#......#.#",  // GarbageCan(6,7)
      "##########",
  };
  return build_scene("scenario_recyclebin", grid, Pose{{1, 1}, Facing::East},
                     {
                         {"garbagecan_1", "GarbageCan", {6, 7}, "", false},
                         {"creditcard_1", "CreditCard", {2, 2}, "", false},
                     });
}

Scene make_scenario_lamp() {
  const std::vector<std::string> grid = {
      "##########",
      "#......#.#",  // DeskLamp(1,7)
      "#........#",
      "#........#",
      "#........#",
      "#........#",
      "#........#",
      "##########",
  };
  return build_scene("scenario_lamp", grid, Pose{{5, 2}, Facing::North},
                     {
                         {"desklamp_1", "DeskLamp", {1, 7}, "", false},
                         {"book_1", "Book", {2, 6}, "", false},
                     });
}

// ---------------------------------------------------------------------------
// Tasks
// ---------------------------------------------------------------------------

std::string lower_words(const std::string& camel) {
  // "GarbageCan" -> "garbage can"
  std::string out;
  for (char c : camel) {
    if (std::isupper(static_cast<unsigned char>(c)) && !out.empty()) out += ' ';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::string> steps_from_plan(const HighLevelPlan& plan) {
  std::vector<std::string> steps;
  for (const Subgoal& g : plan) {
    const std::string obj = lower_words(g.object.name());
    switch (g.action) {
      case HighLevelAction::Navigation: steps.push_back("go to the " + obj); break;
      case HighLevelAction::PickupObject: steps.push_back("pick up the " + obj); break;
      case HighLevelAction::PutObject: steps.push_back("put it in the " + obj); break;
      case HighLevelAction::OpenObject: steps.push_back("open the " + obj); break;
      case HighLevelAction::CloseObject: steps.push_back("close the " + obj); break;
      case HighLevelAction::ToggleOnObject: steps.push_back("turn on the " + obj); break;
      case HighLevelAction::ToggleOffObject: steps.push_back("turn off the " + obj); break;
      case HighLevelAction::SliceObject: steps.push_back("slice the " + obj); break;
    }
  }
  return steps;
}

HighLevelPlan plan_of(const std::string& text) {
  auto parsed = parse_hlp(text, vocab());
  if (!parsed.ok()) {
    throw std::runtime_error("bad plan text \"" + text + "\": " + parsed.error().message());
  }
  return parsed.value();
}

GoalCondition gc(const std::string& predicate, const std::string& object,
                 const std::string& receptacle = "") {
  nlohmann::json j{{"predicate", predicate}, {"object", object}};
  if (!receptacle.empty()) j["receptacle"] = receptacle;
  return goal_condition_from_json(j, vocab());
}

TaskInstance make_task(const std::string& id, TaskType type, const std::string& goal,
                       const std::string& plan_text, const std::string& scene_id,
                       std::vector<GoalCondition> conditions) {
  TaskInstance task;
  task.id = id;
  task.task_type = type;
  task.instruction.goal = goal;
  task.gold_hlp = plan_of(plan_text);
  task.instruction.steps = steps_from_plan(task.gold_hlp);
  task.scene_id = scene_id;
  task.goal_conditions = std::move(conditions);
  return task;
}

std::string pick_plan(const std::string& obj, const std::string& recep, bool openable) {
  std::string plan = "Navigation " + obj + ", PickupObject " + obj + ", Navigation " + recep;
  if (openable) plan += ", OpenObject " + recep;
  plan += ", PutObject " + recep;
  return plan;
}

std::string stack_plan(const std::string& obj, const std::string& mid,
                       const std::string& recep) {
  return "Navigation " + obj + ", PickupObject " + obj + ", Navigation " + mid +
         ", PutObject " + mid + ", PickupObject " + mid + ", Navigation " + recep +
         ", PutObject " + recep;
}

std::string place_two_plan(const std::string& obj, const std::string& recep, bool openable) {
  std::string once = "Navigation " + obj + ", PickupObject " + obj + ", Navigation " + recep;
  std::string plan = once;
  if (openable) plan += ", OpenObject " + recep;
  plan += ", PutObject " + recep;
  if (openable) plan += ", CloseObject " + recep;
  plan += ", " + once;
  if (openable) plan += ", OpenObject " + recep;
  plan += ", PutObject " + recep;
  return plan;
}

std::string examine_plan(const std::string& obj) {
  return "Navigation " + obj + ", PickupObject " + obj +
         ", Navigation DeskLamp, ToggleOnObject DeskLamp";
}

std::string heat_plan(const std::string& obj, const std::string& recep) {
  return "Navigation " + obj + ", PickupObject " + obj +
         ", Navigation Microwave, OpenObject Microwave, PutObject Microwave, "
         "CloseObject Microwave, ToggleOnObject Microwave, ToggleOffObject Microwave, "
         "OpenObject Microwave, PickupObject " + obj + ", Navigation " + recep +
         ", PutObject " + recep;
}

std::string cool_plan(const std::string& obj, const std::string& recep) {
  return "Navigation " + obj + ", PickupObject " + obj +
         ", Navigation Fridge, OpenObject Fridge, PutObject Fridge, CloseObject Fridge, "
         "OpenObject Fridge, PickupObject " + obj + ", Navigation " + recep +
         ", PutObject " + recep;
}

std::string clean_plan(const std::string& obj, const std::string& recep) {
  return "Navigation " + obj + ", PickupObject " + obj +
         ", Navigation SinkBasin, PutObject SinkBasin, Navigation Faucet, "
         "ToggleOnObject Faucet, ToggleOffObject Faucet, Navigation " + obj +
         ", PickupObject " + obj + ", Navigation " + recep + ", PutObject " + recep;
}

std::string slice_heat_plan(const std::string& obj, const std::string& recep) {
  return "Navigation Knife, PickupObject Knife, Navigation " + obj + ", SliceObject " + obj +
         ", Navigation " + recep + ", PutObject " + recep + ", Navigation " + obj +
         ", PickupObject " + obj +
         ", Navigation Microwave, OpenObject Microwave, PutObject Microwave, "
         "CloseObject Microwave, ToggleOnObject Microwave, ToggleOffObject Microwave, "
         "OpenObject Microwave, PickupObject " + obj + ", Navigation " + recep +
         ", PutObject " + recep;
}

std::vector<TaskInstance> make_suite() {
  std::vector<TaskInstance> tasks;
  auto add = [&](TaskInstance t) { tasks.push_back(std::move(t)); };

  // Pick & Place
  add(make_task("suite_pick_00", TaskType::PickAndPlace, "put the apple in the garbage can",
                pick_plan("Apple", "GarbageCan", false), "kitchen_00",
                {gc("ObjectInReceptacle", "Apple", "GarbageCan")}));
  add(make_task("suite_pick_01", TaskType::PickAndPlace, "put the lettuce in the cabinet",
                pick_plan("Lettuce", "Cabinet", true), "kitchen_01",
                {gc("ObjectInReceptacle", "Lettuce", "Cabinet")}));
  add(make_task("suite_pick_02", TaskType::PickAndPlace, "put the watch on the side table",
                pick_plan("Watch", "SideTable", false), "office_00",
                {gc("ObjectInReceptacle", "Watch", "SideTable")}));
  add(make_task("suite_pick_03", TaskType::PickAndPlace,
                "throw the keychain in the garbage can",
                pick_plan("KeyChain", "GarbageCan", false), "office_01",
                {gc("ObjectInReceptacle", "KeyChain", "GarbageCan")}));
  add(make_task("suite_pick_04", TaskType::PickAndPlace, "put the cell phone on the desk",
                pick_plan("CellPhone", "Desk", false), "office_02",
                {gc("ObjectInReceptacle", "CellPhone", "Desk")}));

  // Stack & Place
  const char* stack_goals[5] = {
      "put the mug on the plate and put them on the dining table",
      "stack the mug on the plate and move the stack to the dining table",
      "place the mug on a plate, then place the plate on the dining table",
      "put a mug on a plate and set it on the dining table",
      "move the mug onto the plate and carry both to the dining table",
  };
  for (int i = 0; i < 5; ++i) {
    char id[32], scene[32];
    std::snprintf(id, sizeof(id), "suite_stack_%02d", i);
    std::snprintf(scene, sizeof(scene), "kitchen_%02d", i);
    add(make_task(id, TaskType::StackAndPlace, stack_goals[i],
                  stack_plan("Mug", "Plate", "DiningTable"), scene,
                  {gc("ObjectInReceptacle", "Mug", "Plate"),
                   gc("ObjectInReceptacle", "Plate", "DiningTable")}));
  }

  // Place Two
  add(make_task("suite_two_00", TaskType::PlaceTwo, "put two eggs in the box",
                place_two_plan("Egg", "Box", true), "kitchen_05",
                {gc("TwoObjectsInReceptacle", "Egg", "Box")}));
  add(make_task("suite_two_01", TaskType::PlaceTwo, "place two eggs into the box",
                place_two_plan("Egg", "Box", true), "kitchen_06",
                {gc("TwoObjectsInReceptacle", "Egg", "Box")}));
  add(make_task("suite_two_02", TaskType::PlaceTwo, "put two pencils in the box",
                place_two_plan("Pencil", "Box", true), "office_03",
                {gc("TwoObjectsInReceptacle", "Pencil", "Box")}));
  add(make_task("suite_two_03", TaskType::PlaceTwo, "move two pencils into the box",
                place_two_plan("Pencil", "Box", true), "office_04",
                {gc("TwoObjectsInReceptacle", "Pencil", "Box")}));
  add(make_task("suite_two_04", TaskType::PlaceTwo, "store two pencils in the box",
                place_two_plan("Pencil", "Box", true), "office_05",
                {gc("TwoObjectsInReceptacle", "Pencil", "Box")}));

  // Examine
  const char* examine_goals[5] = {
      "look at the book under the desk lamp",
      "examine the book by the light of the desk lamp",
      "look at the watch under the desk lamp",
      "read the book under the desk lamp",
      "examine the watch under the desk lamp",
  };
  const char* examine_objects[5] = {"Book", "Book", "Watch", "Book", "Watch"};
  for (int i = 0; i < 5; ++i) {
    char id[32], scene[32];
    std::snprintf(id, sizeof(id), "suite_examine_%02d", i);
    std::snprintf(scene, sizeof(scene), "office_%02d", i + 2);
    add(make_task(id, TaskType::Examine, examine_goals[i], examine_plan(examine_objects[i]),
                  scene,
                  {gc("ObjectToggledOn", "DeskLamp"),
                   gc("ObjectExaminedUnderLamp", examine_objects[i])}));
  }

  // Heat & Place
  add(make_task("suite_heat_00", TaskType::HeatAndPlace,
                "cook the potato and put it on the counter", heat_plan("Potato", "CounterTop"),
                "kitchen_00",
                {gc("ObjectHeated", "Potato"),
                 gc("ObjectInReceptacle", "Potato", "CounterTop")}));
  add(make_task("suite_heat_01", TaskType::HeatAndPlace,
                "heat the apple and put it on the dining table",
                heat_plan("Apple", "DiningTable"), "kitchen_01",
                {gc("ObjectHeated", "Apple"),
                 gc("ObjectInReceptacle", "Apple", "DiningTable")}));
  add(make_task("suite_heat_02", TaskType::HeatAndPlace,
                "warm up the tomato and place it on the counter",
                heat_plan("Tomato", "CounterTop"), "kitchen_02",
                {gc("ObjectHeated", "Tomato"),
                 gc("ObjectInReceptacle", "Tomato", "CounterTop")}));
  add(make_task("suite_heat_03", TaskType::HeatAndPlace,
                "microwave the potato and put it on the dining table",
                heat_plan("Potato", "DiningTable"), "kitchen_03",
                {gc("ObjectHeated", "Potato"),
                 gc("ObjectInReceptacle", "Potato", "DiningTable")}));
  add(make_task("suite_heat_04", TaskType::HeatAndPlace,
                "slice the bread, cook it, and put it on the counter",
                slice_heat_plan("Bread", "CounterTop"), "kitchen_04",
                {gc("ObjectSliced", "Bread"), gc("ObjectHeated", "Bread"),
                 gc("ObjectInReceptacle", "Bread", "CounterTop")}));

  // Cool & Place
  add(make_task("suite_cool_00", TaskType::CoolAndPlace,
                "chill the tomato and put it on the dining table",
                cool_plan("Tomato", "DiningTable"), "kitchen_02",
                {gc("ObjectCooled", "Tomato"),
                 gc("ObjectInReceptacle", "Tomato", "DiningTable")}));
  add(make_task("suite_cool_01", TaskType::CoolAndPlace,
                "cool the apple and place it on the counter", cool_plan("Apple", "CounterTop"),
                "kitchen_03",
                {gc("ObjectCooled", "Apple"),
                 gc("ObjectInReceptacle", "Apple", "CounterTop")}));
  add(make_task("suite_cool_02", TaskType::CoolAndPlace,
                "chill the lettuce and put it on the dining table",
                cool_plan("Lettuce", "DiningTable"), "kitchen_04",
                {gc("ObjectCooled", "Lettuce"),
                 gc("ObjectInReceptacle", "Lettuce", "DiningTable")}));
  add(make_task("suite_cool_03", TaskType::CoolAndPlace,
                "refrigerate the potato then put it on the counter",
                cool_plan("Potato", "CounterTop"), "kitchen_05",
                {gc("ObjectCooled", "Potato"),
                 gc("ObjectInReceptacle", "Potato", "CounterTop")}));
  add(make_task("suite_cool_04", TaskType::CoolAndPlace,
                "cool the bread and set it on the dining table",
                cool_plan("Bread", "DiningTable"), "kitchen_06",
                {gc("ObjectCooled", "Bread"),
                 gc("ObjectInReceptacle", "Bread", "DiningTable")}));

  // Clean & Place
  add(make_task("suite_clean_00", TaskType::CleanAndPlace,
                "wash the cup and put it on the counter", clean_plan("Cup", "CounterTop"),
                "kitchen_00",
                {gc("ObjectCleaned", "Cup"), gc("ObjectInReceptacle", "Cup", "CounterTop")}));
  add(make_task("suite_clean_01", TaskType::CleanAndPlace,
                "clean the mug and put it on the dining table",
                clean_plan("Mug", "DiningTable"), "kitchen_01",
                {gc("ObjectCleaned", "Mug"),
                 gc("ObjectInReceptacle", "Mug", "DiningTable")}));
  add(make_task("suite_clean_02", TaskType::CleanAndPlace,
                "rinse the plate and set it on the counter", clean_plan("Plate", "CounterTop"),
                "kitchen_03",
                {gc("ObjectCleaned", "Plate"),
                 gc("ObjectInReceptacle", "Plate", "CounterTop")}));
  add(make_task("suite_clean_03", TaskType::CleanAndPlace,
                "wash the tomato and put it on the dining table",
                clean_plan("Tomato", "DiningTable"), "kitchen_05",
                {gc("ObjectCleaned", "Tomato"),
                 gc("ObjectInReceptacle", "Tomato", "DiningTable")}));
  add(make_task("suite_clean_04", TaskType::CleanAndPlace,
                "rinse the apple and place it on the counter",
                clean_plan("Apple", "CounterTop"), "kitchen_06",
                {gc("ObjectCleaned", "Apple"),
                 gc("ObjectInReceptacle", "Apple", "CounterTop")}));

  return tasks;
}

std::vector<TaskInstance> make_train() {
  std::vector<TaskInstance> tasks;
  int counter = 0;
  auto add = [&](TaskType type, const std::string& goal, const std::string& plan_text,
                 const std::string& scene_id, std::vector<GoalCondition> conditions) {
    char id[32];
    std::snprintf(id, sizeof(id), "train_%03d", counter++);
    tasks.push_back(make_task(id, type, goal, plan_text, scene_id, std::move(conditions)));
  };

  struct PickSpec {
    const char* goal;
    const char* obj;
    const char* recep;
    bool openable;
    const char* scene;
  };
  const PickSpec picks[8] = {
      {"put the potato in the garbage can", "Potato", "GarbageCan", false, "kitchen_00"},
      {"put the bread in the cabinet", "Bread", "Cabinet", true, "kitchen_00"},
      {"move the tomato to the dining table", "Tomato", "DiningTable", false, "kitchen_00"},
      {"put the mug on the counter", "Mug", "CounterTop", false, "kitchen_00"},
      {"put the book on the shelf", "Book", "Shelf", false, "office_00"},
      {"put the credit card in the drawer", "CreditCard", "Drawer", true, "office_00"},
      {"put the pencil on the side table", "Pencil", "SideTable", false, "office_00"},
      {"put the watch on the desk", "Watch", "Desk", false, "office_00"},
  };
  for (const PickSpec& s : picks) {
    add(TaskType::PickAndPlace, s.goal, pick_plan(s.obj, s.recep, s.openable), s.scene,
        {gc("ObjectInReceptacle", s.obj, s.recep)});
  }

  const char* stack_objs[8] = {"Mug", "Cup", "Egg", "Tomato", "Apple", "Potato", "Lettuce",
                               "Bread"};
  const char* stack_receps[8] = {"DiningTable", "CounterTop", "DiningTable", "CounterTop",
                                 "DiningTable", "CounterTop", "DiningTable", "CounterTop"};
  for (int i = 0; i < 8; ++i) {
    const std::string obj = lower_words(stack_objs[i]);
    const std::string recep = lower_words(stack_receps[i]);
    add(TaskType::StackAndPlace,
        "put the " + obj + " on the plate and move them to the " + recep,
        stack_plan(stack_objs[i], "Plate", stack_receps[i]), "kitchen_00",
        {gc("ObjectInReceptacle", stack_objs[i], "Plate"),
         gc("ObjectInReceptacle", "Plate", stack_receps[i])});
  }

  struct TwoSpec {
    const char* goal;
    const char* obj;
    const char* recep;
    bool openable;
    const char* scene;
  };
  const TwoSpec twos[8] = {
      {"put two eggs in the box", "Egg", "Box", true, "kitchen_00"},
      {"put two eggs in the cabinet", "Egg", "Cabinet", true, "kitchen_00"},
      {"put two eggs in the fridge", "Egg", "Fridge", true, "kitchen_00"},
      {"put two eggs in the garbage can", "Egg", "GarbageCan", false, "kitchen_00"},
      {"put two pencils in the box", "Pencil", "Box", true, "office_00"},
      {"put two pencils in the drawer", "Pencil", "Drawer", true, "office_00"},
      {"put two pencils on the desk", "Pencil", "Desk", false, "office_00"},
      {"put two pencils on the side table", "Pencil", "SideTable", false, "office_00"},
  };
  for (const TwoSpec& s : twos) {
    add(TaskType::PlaceTwo, s.goal, place_two_plan(s.obj, s.recep, s.openable), s.scene,
        {gc("TwoObjectsInReceptacle", s.obj, s.recep)});
  }

  const char* examine_objs[8] = {"Book", "Watch", "CellPhone", "KeyChain",
                                 "Book", "Watch", "CellPhone", "KeyChain"};
  const char* examine_forms[8] = {
      "look at the %s under the desk lamp",    "examine the %s under the desk lamp",
      "inspect the %s under the desk lamp",    "check the %s under the desk lamp",
      "study the %s in the lamp light",        "look at the %s in the lamp light",
      "examine the %s in the lamp light",      "inspect the %s in the lamp light",
  };
  for (int i = 0; i < 8; ++i) {
    char goal[128];
    std::snprintf(goal, sizeof(goal), examine_forms[i],
                  lower_words(examine_objs[i]).c_str());
    add(TaskType::Examine, goal, examine_plan(examine_objs[i]), "office_00",
        {gc("ObjectToggledOn", "DeskLamp"),
         gc("ObjectExaminedUnderLamp", examine_objs[i])});
  }

  const char* heat_objs[8] = {"Potato", "Apple", "Tomato", "Bread",
                              "Egg",    "Potato", "Apple", "Bread"};
  const char* heat_receps[8] = {"CounterTop", "DiningTable", "CounterTop", "DiningTable",
                                "CounterTop", "DiningTable", "CounterTop", "CounterTop"};
  const char* heat_forms[8] = {
      "cook the %s and put it on the %s",      "heat the %s and put it on the %s",
      "warm up the %s and put it on the %s",   "microwave the %s and put it on the %s",
      "cook the %s and place it on the %s",    "heat up the %s and move it to the %s",
      "microwave the %s and set it on the %s", "heat the %s and leave it on the %s",
  };
  for (int i = 0; i < 8; ++i) {
    char goal[160];
    std::snprintf(goal, sizeof(goal), heat_forms[i], lower_words(heat_objs[i]).c_str(),
                  lower_words(heat_receps[i]).c_str());
    add(TaskType::HeatAndPlace, goal, heat_plan(heat_objs[i], heat_receps[i]), "kitchen_00",
        {gc("ObjectHeated", heat_objs[i]),
         gc("ObjectInReceptacle", heat_objs[i], heat_receps[i])});
  }

  const char* cool_objs[8] = {"Tomato", "Apple", "Lettuce", "Potato",
                              "Bread",  "Egg",   "Tomato",  "Apple"};
  const char* cool_receps[8] = {"DiningTable", "CounterTop", "DiningTable", "CounterTop",
                                "DiningTable", "CounterTop", "CounterTop", "DiningTable"};
  const char* cool_forms[8] = {
      "chill the %s and put it on the %s",       "cool the %s and put it on the %s",
      "refrigerate the %s and put it on the %s", "chill the %s and place it on the %s",
      "cool the %s and set it on the %s",        "refrigerate the %s and move it to the %s",
      "cool down the %s and put it on the %s",   "chill the %s and leave it on the %s",
  };
  for (int i = 0; i < 8; ++i) {
    char goal[160];
    std::snprintf(goal, sizeof(goal), cool_forms[i], lower_words(cool_objs[i]).c_str(),
                  lower_words(cool_receps[i]).c_str());
    add(TaskType::CoolAndPlace, goal, cool_plan(cool_objs[i], cool_receps[i]), "kitchen_00",
        {gc("ObjectCooled", cool_objs[i]),
         gc("ObjectInReceptacle", cool_objs[i], cool_receps[i])});
  }

  const char* clean_objs[8] = {"Cup",   "Mug",    "Plate", "Apple",
                               "Tomato", "Lettuce", "Potato", "Bread"};
  const char* clean_receps[8] = {"CounterTop", "DiningTable", "CounterTop", "DiningTable",
                                 "CounterTop", "DiningTable", "CounterTop", "DiningTable"};
  const char* clean_forms[8] = {
      "wash the %s and put it on the %s",   "clean the %s and put it on the %s",
      "rinse the %s and put it on the %s",  "wash the %s and place it on the %s",
      "clean the %s and set it on the %s",  "rinse the %s and move it to the %s",
      "wash off the %s and put it on the %s", "rinse off the %s and put it on the %s",
  };
  for (int i = 0; i < 8; ++i) {
    char goal[160];
    std::snprintf(goal, sizeof(goal), clean_forms[i], lower_words(clean_objs[i]).c_str(),
                  lower_words(clean_receps[i]).c_str());
    add(TaskType::CleanAndPlace, goal, clean_plan(clean_objs[i], clean_receps[i]),
        "kitchen_00",
        {gc("ObjectCleaned", clean_objs[i]),
         gc("ObjectInReceptacle", clean_objs[i], clean_receps[i])});
  }

  return tasks;
}

std::vector<TaskInstance> make_scenarios() {
  std::vector<TaskInstance> tasks;
  tasks.push_back(make_task(
      "scn_fridge", TaskType::PickAndPlace, "throw away the potato",
      "Navigation Fridge, OpenObject Fridge, Navigation Potato, PickupObject Potato, "
      "Navigation GarbageCan, PutObject GarbageCan",
      "scenario_fridge", {gc("ObjectInReceptacle", "Potato", "GarbageCan")}));
  tasks.push_back(make_task(
      "scn_cabinet", TaskType::PickAndPlace, "put the cup on the desk",
      "Navigation Cabinet, OpenObject Cabinet, Navigation Cup, PickupObject Cup, "
      "Navigation Desk, PutObject Desk",
      "scenario_cabinet", {gc("ObjectInReceptacle", "Cup", "Desk")}));
  tasks.push_back(make_task(
      "scn_recyclebin", TaskType::PickAndPlace, "put the credit card in the recycle bin",
      "Navigation CreditCard, PickupObject CreditCard, Navigation GarbageCan, "
      "PutObject GarbageCan",
      "scenario_recyclebin", {gc("ObjectInReceptacle", "CreditCard", "GarbageCan")}));
  tasks.push_back(make_task(
      "scn_lamp", TaskType::Examine, "look at the book under the lamp",
      "Navigation Book, PickupObject Book, Navigation DeskLamp, ToggleOnObject DeskLamp",
      "scenario_lamp",
      {gc("ObjectToggledOn", "DeskLamp"), gc("ObjectExaminedUnderLamp", "Book")}));
  return tasks;
}

nlohmann::json scenario_rules() {
  nlohmann::json rules = nlohmann::json::array();
  auto rule = [&](const std::string& goal, nlohmann::json extra, const std::string& respond) {
    extra["goal"] = goal;
    extra["respond"] = respond;
    rules.push_back(std::move(extra));
  };

  // Fridge containment: the naive plan chases an unseen potato; once the
  // fridge has been observed, the re-plan routes through it.
  rule("throw away the potato",
       {{"completed_includes", {"PickupObject Potato"}}},
       "Navigation GarbageCan, PutObject GarbageCan");
  rule("throw away the potato", {{"observed_includes", {"Fridge"}}},
       "Navigation Fridge, OpenObject Fridge, Navigation Potato, PickupObject Potato, "
       "Navigation GarbageCan, PutObject GarbageCan");
  rule("throw away the potato", nlohmann::json::object(),
       "Navigation Potato, PickupObject Potato, Navigation GarbageCan, PutObject GarbageCan");

  // Cabinet containment.
  rule("put the cup on the desk",
       {{"completed_includes", {"PickupObject Cup"}}},
       "Navigation Desk, PutObject Desk");
  rule("put the cup on the desk", {{"observed_includes", {"Cabinet"}}},
       "Navigation Cabinet, OpenObject Cabinet, Navigation Cup, PickupObject Cup, "
       "Navigation Desk, PutObject Desk");
  rule("put the cup on the desk", nlohmann::json::object(),
       "Navigation Cup, PickupObject Cup, Navigation Desk, PutObject Desk");

  // Naming mismatch: the instruction says recycle bin, the scene only has a
  // garbage can.
  rule("put the credit card in the recycle bin",
       {{"completed_includes", {"PickupObject CreditCard"}},
        {"observed_includes", {"GarbageCan"}}},
       "Navigation GarbageCan, PutObject GarbageCan");
  rule("put the credit card in the recycle bin",
       {{"completed_includes", {"PickupObject CreditCard"}}},
       "Navigation RecycleBin, PutObject RecycleBin");
  rule("put the credit card in the recycle bin", nlohmann::json::object(),
       "Navigation CreditCard, PickupObject CreditCard, Navigation RecycleBin, "
       "PutObject RecycleBin");

  // Naming mismatch: lamp vs desk lamp.
  rule("look at the book under the lamp",
       {{"completed_includes", {"PickupObject Book"}},
        {"observed_includes", {"DeskLamp"}}},
       "Navigation DeskLamp, ToggleOnObject DeskLamp");
  rule("look at the book under the lamp",
       {{"completed_includes", {"PickupObject Book"}}},
       "Navigation Lamp, ToggleOnObject Lamp");
  rule("look at the book under the lamp", nlohmann::json::object(),
       "Navigation Book, PickupObject Book, Navigation Lamp, ToggleOnObject Lamp");

  return nlohmann::json{{"rules", rules}};
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path out = "data";
  if (argc > 1) out = argv[1];
  std::filesystem::create_directories(out / "scenes");

  std::vector<Scene> scenes;
  for (int v = 0; v < 7; ++v) scenes.push_back(make_kitchen(v));
  for (int v = 0; v < 7; ++v) scenes.push_back(make_office(v));
  scenes.push_back(make_scenario_fridge());
  scenes.push_back(make_scenario_cabinet());
  scenes.push_back(make_scenario_recyclebin());
  scenes.push_back(make_scenario_lamp());
  for (const Scene& scene : scenes) {
    save_scene(out / "scenes" / (scene.id + ".json"), scene);
  }

  const std::vector<TaskInstance> suite = make_suite();
  const std::vector<TaskInstance> train = make_train();
  const std::vector<TaskInstance> scenarios = make_scenarios();

  // Goals must be globally unique: the oracle backend keys on them.
  std::set<std::string> goals;
  for (const auto* set : {&suite, &train, &scenarios}) {
    for (const TaskInstance& task : *set) {
      if (!goals.insert(task.instruction.goal).second) {
        std::cerr << "duplicate goal: " << task.instruction.goal << "\n";
        return 1;
      }
    }
  }

  std::map<std::string, const Scene*> scene_by_id;
  for (const Scene& scene : scenes) scene_by_id[scene.id] = &scene;
  for (const auto* set : {&suite, &scenarios}) {
    for (const TaskInstance& task : *set) {
      validate_task_against_scene(task, *scene_by_id.at(task.scene_id));
    }
  }

  save_dataset(out / "suite.jsonl", suite);
  save_dataset(out / "train.jsonl", train);
  save_dataset(out / "scenarios.jsonl", scenarios);

  std::ofstream rules(out / "scenario_rules.json");
  rules << scenario_rules().dump(2) << '\n';

  std::cout << "wrote " << scenes.size() << " scenes, " << suite.size() << " suite tasks, "
            << train.size() << " train tasks, " << scenarios.size() << " scenario tasks\n";
  return 0;
}
