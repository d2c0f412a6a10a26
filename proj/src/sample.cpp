#include "hlplan/sample.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hlplan/rng.hpp"

namespace hlplan {

std::vector<TaskInstance> stratified_sample(std::span<const TaskInstance> data,
                                            std::size_t n, std::uint64_t seed) {
  if (n > data.size()) {
    throw InsufficientData("sample size exceeds dataset size");
  }
  if (n == 0) return {};

  std::array<std::vector<std::size_t>, kTaskTypeCount> strata;
  for (std::size_t i = 0; i < data.size(); ++i) {
    strata[static_cast<std::size_t>(data[i].task_type)].push_back(i);
  }

  const bool need_all_types = n >= kTaskTypeCount;
  if (need_all_types) {
    for (std::size_t t = 0; t < kTaskTypeCount; ++t) {
      if (strata[t].empty()) {
        throw InsufficientData("no instances of task type " +
                               std::string(task_type_name(all_task_types()[t])));
      }
    }
  }

  // Largest-remainder proportional allocation across present strata.
  const std::size_t total = data.size();
  std::array<std::size_t, kTaskTypeCount> counts{};
  std::array<std::size_t, kTaskTypeCount> remainders{};
  std::size_t assigned = 0;
  for (std::size_t t = 0; t < kTaskTypeCount; ++t) {
    const std::size_t numer = n * strata[t].size();
    counts[t] = numer / total;
    remainders[t] = numer % total;
    assigned += counts[t];
  }
  std::vector<std::size_t> order(kTaskTypeCount);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];
  });
  for (std::size_t i = 0; assigned < n; ++i) {
    const std::size_t t = order[i % kTaskTypeCount];
    if (strata[t].empty()) continue;
    ++counts[t];
    ++assigned;
  }

  // Every present type gets at least one slot when n covers all types.
  if (need_all_types) {
    for (std::size_t t = 0; t < kTaskTypeCount; ++t) {
      while (counts[t] == 0) {
        std::size_t donor = kTaskTypeCount;
        for (std::size_t d = 0; d < kTaskTypeCount; ++d) {
          if (counts[d] > 1 && (donor == kTaskTypeCount || counts[d] > counts[donor])) {
            donor = d;
          }
        }
        if (donor == kTaskTypeCount) break;
        --counts[donor];
        ++counts[t];
      }
    }
  }

  // Respect stratum capacity; spill excess to types with spare room.
  for (std::size_t t = 0; t < kTaskTypeCount; ++t) {
    while (counts[t] > strata[t].size()) {
      std::size_t target = kTaskTypeCount;
      std::size_t best_spare = 0;
      for (std::size_t d = 0; d < kTaskTypeCount; ++d) {
        const std::size_t spare = strata[d].size() - std::min(strata[d].size(), counts[d]);
        if (spare > best_spare) {
          best_spare = spare;
          target = d;
        }
      }
      if (target == kTaskTypeCount) break;
      --counts[t];
      ++counts[target];
    }
  }

  std::mt19937_64 gen(seed);
  std::vector<std::size_t> selected;
  selected.reserve(n);
  for (std::size_t t = 0; t < kTaskTypeCount; ++t) {
    std::vector<std::size_t> pool = strata[t];
    for (std::size_t i = 0; i < counts[t] && i < pool.size(); ++i) {
      const std::size_t j = i + static_cast<std::size_t>(uniform_below(gen, pool.size() - i));
      std::swap(pool[i], pool[j]);
      selected.push_back(pool[i]);
    }
  }
  std::sort(selected.begin(), selected.end());

  std::vector<TaskInstance> out;
  out.reserve(selected.size());
  for (std::size_t idx : selected) out.push_back(data[idx]);
  return out;
}

}  // namespace hlplan
