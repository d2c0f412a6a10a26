#include "hlplan/parse.hpp"

#include <cctype>

namespace hlplan {
namespace {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past last
  std::size_t size() const { return end - begin; }
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Span trim_span(std::string_view text, Span s) {
  while (s.begin < s.end && is_space(text[s.begin])) ++s.begin;
  while (s.end > s.begin && is_space(text[s.end - 1])) --s.end;
  return s;
}

std::string_view slice(std::string_view text, Span s) {
  return text.substr(s.begin, s.size());
}

// Comma-separated segments of one line; empty segments are dropped.
std::vector<Span> split_segments(std::string_view text, Span line) {
  std::vector<Span> out;
  std::size_t begin = line.begin;
  for (std::size_t i = line.begin; i <= line.end; ++i) {
    if (i == line.end || text[i] == ',') {
      Span seg = trim_span(text, Span{begin, i});
      if (seg.size() > 0) out.push_back(seg);
      begin = i + 1;
    }
  }
  return out;
}

std::vector<Span> split_tokens(std::string_view text, Span seg) {
  std::vector<Span> out;
  std::size_t i = seg.begin;
  while (i < seg.end) {
    while (i < seg.end && is_space(text[i])) ++i;
    if (i >= seg.end) break;
    std::size_t begin = i;
    while (i < seg.end && !is_space(text[i])) ++i;
    out.push_back(Span{begin, i});
  }
  return out;
}

ParseError make_error(ParseError::Kind kind, std::string_view text, Span s) {
  return ParseError{kind, std::string(slice(text, s)), s.begin, s.size()};
}

// "Action Object" segment; the object may span several tokens so that an
// unknown multi-word object reports its full span.
Result<Subgoal, ParseError> parse_canonical_segment(std::string_view text, Span seg,
                                                    const std::vector<Span>& tokens,
                                                    const ObjectVocabulary& vocab) {
  const Span action_span = tokens.front();
  auto action = parse_action(slice(text, action_span));
  if (!action) return make_error(ParseError::Kind::UnknownAction, text, action_span);
  if (tokens.size() < 2) {
    // Dangling action with no object.
    return ParseError{ParseError::Kind::UnknownObject, "", seg.end, 0};
  }
  const Span object_span = trim_span(text, Span{tokens[1].begin, seg.end});
  auto object = vocab.resolve(slice(text, object_span));
  if (!object) return make_error(ParseError::Kind::UnknownObject, text, object_span);
  return Subgoal{*action, *object};
}

}  // namespace

std::string ParseError::message() const {
  switch (kind) {
    case Kind::UnknownAction: return "unknown action \"" + token + "\"";
    case Kind::UnknownObject: return "unknown object \"" + token + "\"";
    case Kind::EmptyPlan: return "empty plan";
  }
  return "parse error";
}

ParseResult parse_hlp(std::string_view text, const ObjectVocabulary& vocab) {
  std::size_t start = 0;
  while (start < text.size() && is_space(text[start])) ++start;
  if (start == text.size()) {
    return ParseError{ParseError::Kind::EmptyPlan, "", 0, 0};
  }

  std::size_t eol = text.find('\n', start);
  if (eol == std::string_view::npos) eol = text.size();
  const Span first_line{start, eol};

  const std::vector<Span> segments = split_segments(text, first_line);
  if (segments.empty()) {
    return ParseError{ParseError::Kind::EmptyPlan, "", start, 0};
  }

  const bool pair_per_line =
      segments.size() == 2 && split_tokens(text, segments[0]).size() == 1 &&
      split_tokens(text, segments[1]).size() == 1;

  if (!pair_per_line) {
    HighLevelPlan plan;
    for (const Span& seg : segments) {
      const std::vector<Span> tokens = split_tokens(text, seg);
      auto subgoal = parse_canonical_segment(text, seg, tokens, vocab);
      if (!subgoal.ok()) return subgoal.error();
      plan.push_back(std::move(subgoal.value()));
    }
    return plan;
  }

  // One "Action, Object" pair per line; stop at the first blank or
  // non-conforming line (stop-sequence residue).
  HighLevelPlan plan;
  std::size_t line_begin = start;
  while (line_begin < text.size()) {
    std::size_t line_end = text.find('\n', line_begin);
    if (line_end == std::string_view::npos) line_end = text.size();
    const Span line = trim_span(text, Span{line_begin, line_end});
    if (line.size() == 0) break;
    const std::vector<Span> segs = split_segments(text, line);
    if (segs.size() != 2) break;
    const std::vector<Span> action_tokens = split_tokens(text, segs[0]);
    const std::vector<Span> object_tokens = split_tokens(text, segs[1]);
    if (action_tokens.size() != 1 || object_tokens.size() != 1) {
      if (plan.empty()) {
        // First line selected this mode, so it must conform.
        return make_error(ParseError::Kind::UnknownAction, text, segs[0]);
      }
      break;
    }
    auto action = parse_action(slice(text, action_tokens[0]));
    if (!action) return make_error(ParseError::Kind::UnknownAction, text, action_tokens[0]);
    auto object = vocab.resolve(slice(text, object_tokens[0]));
    if (!object) return make_error(ParseError::Kind::UnknownObject, text, object_tokens[0]);
    plan.push_back(Subgoal{*action, *object});
    line_begin = line_end + 1;
  }
  if (plan.empty()) {
    return ParseError{ParseError::Kind::EmptyPlan, "", start, 0};
  }
  return plan;
}

std::string serialize_subgoal(const Subgoal& g) {
  std::string out(action_name(g.action));
  out += ' ';
  out += g.object.name();
  return out;
}

std::string serialize_hlp(const HighLevelPlan& plan) {
  std::string out;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (i > 0) out += ", ";
    out += serialize_subgoal(plan[i]);
  }
  return out;
}

}  // namespace hlplan
