#include "hlplan/loocv.hpp"

#include <algorithm>

#include "hlplan/metrics.hpp"
#include "hlplan/sample.hpp"

namespace hlplan {
namespace {

std::vector<TaskInstance> fold_corpus(const std::vector<TaskInstance>& corpus,
                                      std::size_t held_out) {
  std::vector<TaskInstance> fold;
  fold.reserve(corpus.size() - 1);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (i != held_out) fold.push_back(corpus[i]);
  }
  return fold;
}

double run_folds(const std::vector<TaskInstance>& corpus, const PromptConfig& config,
                 const PlannerFactory& factory, std::vector<std::string>* faults) {
  double correct = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto planner = factory(config, fold_corpus(corpus, i));
    auto result = planner->static_plan(corpus[i].instruction);
    if (!result.ok()) {
      if (faults != nullptr) {
        faults->push_back(corpus[i].id + ": " + result.error().message);
      }
      continue;
    }
    correct += hlp_accuracy_static(result.value(), corpus[i].gold_hlp);
  }
  return correct / static_cast<double>(corpus.size());
}

}  // namespace

std::vector<VariantScore> loocv(const std::vector<TaskInstance>& corpus,
                                const std::vector<PromptVariant>& variants,
                                const PlannerFactory& factory) {
  if (corpus.size() < 2) {
    throw std::invalid_argument("loocv needs at least 2 corpus examples");
  }
  std::vector<VariantScore> scores;
  scores.reserve(variants.size());
  for (const PromptVariant& variant : variants) {
    VariantScore score;
    score.name = variant.name;
    score.config = variant.config;
    score.score = run_folds(corpus, variant.config, factory, &score.faults);
    scores.push_back(std::move(score));
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const VariantScore& a, const VariantScore& b) {
                     return a.score > b.score;
                   });
  return scores;
}

VariantScore knn_ablation(const std::vector<TaskInstance>& corpus, RetrieverMode mode,
                          std::uint64_t seed, const PromptConfig& config,
                          const std::shared_ptr<LLMBackend>& backend,
                          const ObjectVocabulary& vocab) {
  if (corpus.size() < 2) {
    throw std::invalid_argument("knn_ablation needs at least 2 corpus examples");
  }
  auto provider = std::make_shared<LexicalEmbeddingProvider>();
  VariantScore score;
  score.name = mode == RetrieverMode::Knn ? "knn" : "random";
  score.config = config;

  double correct = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::shared_ptr<ExampleRetriever> retriever;
    std::vector<TaskInstance> fold = fold_corpus(corpus, i);
    if (mode == RetrieverMode::Knn) {
      retriever = std::make_shared<KnnRetriever>(std::move(fold), provider, config.use_steps);
    } else {
      retriever = std::make_shared<RandomRetriever>(std::move(fold), seed + i);
    }
    Planner planner(backend, retriever, config, vocab);
    auto result = planner.static_plan(corpus[i].instruction);
    if (!result.ok()) {
      score.faults.push_back(corpus[i].id + ": " + result.error().message);
      continue;
    }
    correct += hlp_accuracy_static(result.value(), corpus[i].gold_hlp);
  }
  score.score = correct / static_cast<double>(corpus.size());
  return score;
}

std::vector<SweepCell> loocv_sweep(const std::vector<TaskInstance>& corpus,
                                   const std::vector<std::size_t>& ks,
                                   const std::vector<std::size_t>& train_sizes,
                                   const PromptConfig& base_config,
                                   const PlannerFactory& factory, std::uint64_t seed) {
  std::vector<SweepCell> cells;
  for (std::size_t train_size : train_sizes) {
    const std::size_t effective = std::min(train_size, corpus.size());
    const std::vector<TaskInstance> subset = stratified_sample(corpus, effective, seed);
    for (std::size_t k : ks) {
      PromptConfig config = base_config;
      config.k = k;
      SweepCell cell;
      cell.k = k;
      cell.train_size = effective;
      cell.score = run_folds(subset, config, factory, nullptr);
      cells.push_back(cell);
    }
  }
  return cells;
}

}  // namespace hlplan
