#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hlplan/result.hpp"
#include "hlplan/types.hpp"

namespace hlplan {

struct ParseError {
  enum class Kind { UnknownAction, UnknownObject, EmptyPlan };
  Kind kind{};
  std::string token;       // offending text
  std::size_t offset = 0;  // byte span into the original input
  std::size_t length = 0;
  std::string message() const;
};

using ParseResult = Result<HighLevelPlan, ParseError>;

// Parses a raw LLM continuation into a subgoal sequence.
//
// Canonical form is a single line of "Action Object" pairs joined by
// commas ("Navigation Potato, PickupObject Potato"). Parsing stops at the
// first newline. When the first line is a single "Action, Object" pair the
// input is instead read as one such pair per line, stopping at the first
// blank or non-conforming line; real models sometimes emit that shape.
// Action names and object classes resolve case-insensitively; anything
// else is a typed error.
ParseResult parse_hlp(std::string_view text, const ObjectVocabulary& vocab);

std::string serialize_subgoal(const Subgoal& g);

// Inverse of parse_hlp for valid plans: "Action Object" joined with ", ".
// The empty plan serializes to "".
std::string serialize_hlp(const HighLevelPlan& plan);

}  // namespace hlplan
