#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hlplan/task.hpp"

namespace hlplan {

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random stratified sample of n instances, proportional to the per-type
// counts (largest-remainder rounding, so each type's count differs from its
// exact quota by at most 1). When n >= 7 every task type receives at least
// one slot and an empty stratum raises InsufficientData. Deterministic for
// a fixed seed; the result preserves the input order.
std::vector<TaskInstance> stratified_sample(std::span<const TaskInstance> data,
                                            std::size_t n, std::uint64_t seed);

}  // namespace hlplan
