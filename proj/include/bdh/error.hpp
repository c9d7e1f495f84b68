// Copyright 2026 The bdhlattice Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bdh {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction sequence violates its structural rules. `step_index` is the
/// 0-based position in the step list (the step that adds vertex v_{index+2}).
class SequenceError : public Error {
 public:
  SequenceError(std::size_t step_index, const std::string& what)
      : Error("step " + std::to_string(step_index) + ": " + what),
        step_index_(step_index) {}

  std::size_t step_index() const noexcept { return step_index_; }

 private:
  std::size_t step_index_;
};

/// Malformed graph data: loops, parallel edges, same-shore edges, bad ids.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain, e.g. recognition on a disconnected
/// graph or a vertex id out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine refused an instance above its size guard.
class GuardError : public Error {
 public:
  GuardError(const std::string& what, std::size_t limit)
      : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// An interval whose alpha arc is not an ancestor of its beta arc.
class CorruptIntervalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bdh
