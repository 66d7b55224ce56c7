// Copyright 2026 The socnetgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOCNETGEN_DIAGNOSTICS_HPP_
#define SOCNETGEN_DIAGNOSTICS_HPP_

#include <cstddef>
#include <functional>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace socnetgen {

/// Invalid schema, parameter set, or run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (edge lists, attribute tables, reports).
/// `line()` is 1-based; 0 means the error is not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A statistic cannot be computed from the data given (e.g. too few samples).
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using WarningHandler = std::function<void(const std::string&)>;

namespace detail {

struct WarningState {
  std::mutex mutex;
  WarningHandler handler;
};

inline WarningState& warning_state() {
  static WarningState state;
  return state;
}

}  // namespace detail

/// Replaces the process-wide warning sink and returns the previous one.
/// An empty handler restores the default (standard error).
inline WarningHandler set_warning_handler(WarningHandler handler) {
  auto& state = detail::warning_state();
  std::lock_guard lock(state.mutex);
  return std::exchange(state.handler, std::move(handler));
}

inline void warn(const std::string& message) {
  auto& state = detail::warning_state();
  std::lock_guard lock(state.mutex);
  if (state.handler) {
    state.handler(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace socnetgen

#endif  // SOCNETGEN_DIAGNOSTICS_HPP_
