#include "hlplan/retriever.hpp"

#include <algorithm>

#include "hlplan/rng.hpp"

namespace hlplan {
namespace {

struct Scored {
  double distance;
  std::size_t index;
  const std::string* id;
};

std::vector<TaskInstance> select_top_k(const std::vector<Scored>& scored,
                                       std::span<const TaskInstance> corpus, std::size_t k) {
  std::vector<Scored> order = scored;
  std::sort(order.begin(), order.end(), [](const Scored& a, const Scored& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return *a.id < *b.id;
  });
  order.resize(std::min(k, order.size()));
  // Most similar last.
  std::reverse(order.begin(), order.end());
  std::vector<TaskInstance> out;
  out.reserve(order.size());
  for (const Scored& s : order) out.push_back(corpus[s.index]);
  return out;
}

}  // namespace

std::vector<TaskInstance> knn_retrieve(const Instruction& query,
                                       std::span<const TaskInstance> corpus,
                                       std::size_t k, const EmbeddingProvider& provider,
                                       bool use_steps) {
  if (corpus.empty()) throw EmptyCorpus();
  if (k > corpus.size()) {
    throw std::invalid_argument("k exceeds corpus size");
  }
  const EmbeddingVector q = embed_text(instruction_text(query, use_steps), provider);
  std::vector<Scored> scored;
  scored.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const EmbeddingVector v =
        embed_text(instruction_text(corpus[i].instruction, use_steps), provider);
    scored.push_back({euclidean_distance(q, v), i, &corpus[i].id});
  }
  return select_top_k(scored, corpus, k);
}

KnnRetriever::KnnRetriever(std::vector<TaskInstance> corpus,
                           std::shared_ptr<const EmbeddingProvider> provider, bool use_steps,
                           std::vector<EmbeddingVector> precomputed)
    : corpus_(std::move(corpus)), provider_(std::move(provider)), use_steps_(use_steps) {
  if (precomputed.size() == corpus_.size() && !corpus_.empty()) {
    corpus_embeddings_ = std::move(precomputed);
    return;
  }
  corpus_embeddings_.reserve(corpus_.size());
  for (const TaskInstance& task : corpus_) {
    corpus_embeddings_.push_back(
        embed_text(instruction_text(task.instruction, use_steps_), *provider_));
  }
}

std::vector<TaskInstance> KnnRetriever::retrieve(const Instruction& query, std::size_t k) {
  if (corpus_.empty()) throw EmptyCorpus();
  k = std::min(k, corpus_.size());
  const EmbeddingVector q = embed_text(instruction_text(query, use_steps_), *provider_);
  std::vector<Scored> scored;
  scored.reserve(corpus_.size());
  for (std::size_t i = 0; i < corpus_.size(); ++i) {
    scored.push_back({euclidean_distance(q, corpus_embeddings_[i]), i, &corpus_[i].id});
  }
  return select_top_k(scored, corpus_, k);
}

RandomRetriever::RandomRetriever(std::vector<TaskInstance> corpus, std::uint64_t seed)
    : corpus_(std::move(corpus)), gen_(seed) {}

std::vector<TaskInstance> RandomRetriever::retrieve(const Instruction& query, std::size_t k) {
  (void)query;
  if (corpus_.empty()) throw EmptyCorpus();
  k = std::min(k, corpus_.size());
  std::vector<std::size_t> pool(corpus_.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::vector<TaskInstance> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(gen_, pool.size() - i));
    std::swap(pool[i], pool[j]);
    out.push_back(corpus_[pool[i]]);
  }
  return out;
}

}  // namespace hlplan
