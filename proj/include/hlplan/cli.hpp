#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hlplan/backend.hpp"
#include "hlplan/task.hpp"

namespace hlplan {

// Exit codes: 0 success, 1 run completed but some episodes/items faulted,
// 2 usage or config error, 3 backend error.
int cli_main(int argc, const char* const* argv);
int cli_main(const std::vector<std::string>& args);  // args without argv[0]

// Backend selector strings:
//   oracle                  scripted backend answering with the gold plans
//                           of the dataset being evaluated
//   scripted:<rules.json>   rule table (optionally with an oracle corpus)
//   http://... | https://   completion API endpoint (key via LLM_API_KEY)
//   replay:<dir>            replay recorded responses only
//   record:<dir>:<url>      call <url> and record responses into <dir>
std::shared_ptr<LLMBackend> make_backend(const std::string& spec,
                                         const ObjectVocabulary& vocab,
                                         const std::vector<TaskInstance>& oracle_corpus,
                                         const std::string& model);

}  // namespace hlplan
