#include "doctest.h"

#include <random>

#include "hlplan/parse.hpp"
#include "hlplan/rng.hpp"

#include "support/generators.hpp"

using namespace hlplan;

namespace {
const ObjectVocabulary& vocab() {
  static const ObjectVocabulary v = household_vocabulary();
  return v;
}

Subgoal sg(HighLevelAction a, const char* obj) { return Subgoal{a, ObjectClass(obj)}; }
}  // namespace

TEST_CASE("action and task type enums are exactly the allowed sets") {
  CHECK(all_actions().size() == 8);
  CHECK(all_task_types().size() == 7);
  CHECK(parse_action("Navigation") == HighLevelAction::Navigation);
  CHECK(parse_action("pickupobject") == HighLevelAction::PickupObject);
  CHECK(!parse_action("Pickup"));
  CHECK(!parse_action("FlyTo"));
  CHECK(!parse_task_type("Fly"));
  CHECK(parse_task_type("HeatAndPlace") == TaskType::HeatAndPlace);
}

TEST_CASE("vocabulary lookup is case-insensitive and trimmed") {
  CHECK(vocab().resolve("garbagecan")->name() == "GarbageCan");
  CHECK(vocab().resolve("  Potato ")->name() == "Potato");
  CHECK(!vocab().resolve("Unicorn"));
  CHECK(vocab().traits(ObjectClass("Fridge")).openable);
  CHECK(vocab().traits(ObjectClass("Knife")).pickupable);
  CHECK(is_lamp_class(ObjectClass("DeskLamp")));
  CHECK(is_lamp_class(ObjectClass("Lamp")));
  CHECK(!is_lamp_class(ObjectClass("Fridge")));
}

TEST_CASE("parse_hlp parses the canonical multi-subgoal line") {
  auto result = parse_hlp("Navigation Potato, PickupObject Potato, Navigation Microwave",
                          vocab());
  REQUIRE(result.ok());
  const HighLevelPlan expected = {sg(HighLevelAction::Navigation, "Potato"),
                                  sg(HighLevelAction::PickupObject, "Potato"),
                                  sg(HighLevelAction::Navigation, "Microwave")};
  CHECK(result.value() == expected);
}

TEST_CASE("parse_hlp handles a single subgoal") {
  auto result = parse_hlp("PickupObject Apple", vocab());
  REQUIRE(result.ok());
  CHECK(result.value() == HighLevelPlan{sg(HighLevelAction::PickupObject, "Apple")});
}

TEST_CASE("parse_hlp rejects unknown actions with the offending span") {
  auto result = parse_hlp("FlyTo Moon", vocab());
  REQUIRE(!result.ok());
  CHECK(result.error().kind == ParseError::Kind::UnknownAction);
  CHECK(result.error().token == "FlyTo");
  CHECK(result.error().offset == 0);
  CHECK(result.error().length == 5);
}

TEST_CASE("parse_hlp rejects unknown objects with the offending span") {
  auto result = parse_hlp("Navigation Unicorn", vocab());
  REQUIRE(!result.ok());
  CHECK(result.error().kind == ParseError::Kind::UnknownObject);
  CHECK(result.error().token == "Unicorn");
  CHECK(result.error().offset == 11);
}

TEST_CASE("parse_hlp flags empty input") {
  for (const char* text : {"", "   ", "\n\n", ",,,"}) {
    auto result = parse_hlp(text, vocab());
    REQUIRE(!result.ok());
    CHECK(result.error().kind == ParseError::Kind::EmptyPlan);
  }
}

TEST_CASE("parse_hlp stops at the first newline in canonical form") {
  auto result = parse_hlp("Navigation Potato, PickupObject Potato\ngarbage trailing text",
                          vocab());
  REQUIRE(result.ok());
  CHECK(result.value().size() == 2);
}

TEST_CASE("parse_hlp accepts Action, Object pairs one per line") {
  auto result = parse_hlp("PickupObject, Apple\nNavigation, Fridge\n\nresidue", vocab());
  REQUIRE(result.ok());
  const HighLevelPlan expected = {sg(HighLevelAction::PickupObject, "Apple"),
                                  sg(HighLevelAction::Navigation, "Fridge")};
  CHECK(result.value() == expected);
}

TEST_CASE("parse_hlp accepts a lone Action, Object pair") {
  auto result = parse_hlp("PickupObject, Apple", vocab());
  REQUIRE(result.ok());
  CHECK(result.value() == HighLevelPlan{sg(HighLevelAction::PickupObject, "Apple")});
}

TEST_CASE("parse_hlp is case-insensitive and tolerates whitespace") {
  auto result = parse_hlp("  navigation potato ,  pickupobject potato  ", vocab());
  REQUIRE(result.ok());
  CHECK(result.value().size() == 2);
  CHECK(result.value()[0].object.name() == "Potato");
}

TEST_CASE("parse_hlp reports a dangling action as a missing object") {
  auto result = parse_hlp("Navigation Potato, PickupObject", vocab());
  REQUIRE(!result.ok());
  CHECK(result.error().kind == ParseError::Kind::UnknownObject);
}

TEST_CASE("serialize_hlp matches the fixed rendering") {
  CHECK(serialize_hlp({sg(HighLevelAction::PickupObject, "Apple")}) == "PickupObject Apple");
  CHECK(serialize_hlp({}) == "");
  CHECK(serialize_hlp({sg(HighLevelAction::Navigation, "Fridge"),
                       sg(HighLevelAction::OpenObject, "Fridge")}) ==
        "Navigation Fridge, OpenObject Fridge");
}

TEST_CASE("round-trip identity holds on random plans") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 10000; ++i) {
    const HighLevelPlan plan = testing::random_plan(gen, vocab(), 1, 12);
    auto result = parse_hlp(serialize_hlp(plan), vocab());
    REQUIRE(result.ok());
    REQUIRE(result.value() == plan);
  }
}

TEST_CASE("parser is total over random inputs") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 20000; ++i) {
    const std::string text = testing::random_text(gen, 80);
    auto result = parse_hlp(text, vocab());
    if (!result.ok()) {
      CHECK(result.error().offset <= text.size());
      CHECK(!result.error().message().empty());
    }
  }
}
