#pragma once

#include <cassert>
#include <utility>
#include <variant>

namespace hlplan {

// Minimal expected-style carrier for operations whose failures are data
// rather than exceptions (parsing, planning).
template <typename T, typename E>
class Result {
 public:
  Result(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return data_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() & {
    assert(ok());
    return std::get<0>(data_);
  }
  const T& value() const& {
    assert(ok());
    return std::get<0>(data_);
  }
  T&& value() && {
    assert(ok());
    return std::get<0>(std::move(data_));
  }

  E& error() & {
    assert(!ok());
    return std::get<1>(data_);
  }
  const E& error() const& {
    assert(!ok());
    return std::get<1>(data_);
  }

  T value_or(T fallback) const {
    return ok() ? std::get<0>(data_) : std::move(fallback);
  }

 private:
  std::variant<T, E> data_;
};

}  // namespace hlplan
