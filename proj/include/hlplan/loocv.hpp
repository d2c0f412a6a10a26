#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hlplan/planner.hpp"

namespace hlplan {

struct PromptVariant {
  std::string name;
  PromptConfig config;
};

struct VariantScore {
  std::string name;
  PromptConfig config;
  double score = 0.0;               // mean exact-match HLP accuracy
  std::vector<std::string> faults;  // per-example planner faults
};

// Builds a planner over one fold's retrieval corpus.
using PlannerFactory =
    std::function<std::unique_ptr<Planner>(const PromptConfig&, std::vector<TaskInstance>)>;

// True-few-shot selection: leave-one-out over the training corpus. For each
// variant, every example is held out once, a static plan is produced from
// the remaining corpus, and exact-match accuracy is averaged. The result is
// ranked by score; ties keep declaration order.
std::vector<VariantScore> loocv(const std::vector<TaskInstance>& corpus,
                                const std::vector<PromptVariant>& variants,
                                const PlannerFactory& factory);

enum class RetrieverMode { Knn, Random };

// loocv with the in-context retriever swapped per mode; the random baseline
// is seeded per fold for reproducibility.
VariantScore knn_ablation(const std::vector<TaskInstance>& corpus, RetrieverMode mode,
                          std::uint64_t seed, const PromptConfig& config,
                          const std::shared_ptr<LLMBackend>& backend,
                          const ObjectVocabulary& vocab);

struct SweepCell {
  std::size_t k = 0;
  std::size_t train_size = 0;
  double score = 0.0;
};

// LOOCV accuracy over the (in-context k) x (training set size) grid; the
// training subsets are stratified subsamples of the corpus.
std::vector<SweepCell> loocv_sweep(const std::vector<TaskInstance>& corpus,
                                   const std::vector<std::size_t>& ks,
                                   const std::vector<std::size_t>& train_sizes,
                                   const PromptConfig& base_config,
                                   const PlannerFactory& factory, std::uint64_t seed);

}  // namespace hlplan
