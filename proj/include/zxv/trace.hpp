// Copyright 2026 The zxv Authors
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

#include <stdexcept>
#include <string>
#include <vector>

#include "zxv/rules.hpp"
#include "zxv/zxg.hpp"

namespace zxv {

struct TraceStep {
  std::string rule;
  std::string match;
  std::string snapshot;  // .zxg text after the step
};

/// Replayable rewrite log: the start diagram followed by one snapshot per
/// rule application.
class Trace {
 public:
  Trace() = default;
  explicit Trace(const Diagram& start) : start_(serialize_zxg(start)), current_(start) {}

  const std::string& start() const { return start_; }
  const std::vector<TraceStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const Diagram& current() const { return current_; }

  void record(const Match& m, const Diagram& result) {
    steps_.push_back({rule_name(m.rule), m.summary(), serialize_zxg(result)});
    current_ = result;
  }

  /// Applies the first match of `rule` accepted by `pick` (all matches if
  /// no filter) and records it. Throws std::runtime_error when nothing matches.
  template <class Pick>
  const Diagram& step(RuleName rule, Direction dir, Pick pick, ScalarMode mode = ScalarMode::UpToScalar) {
    for (const Match& m : find_matches(rule, current_, dir, mode)) {
      if (!pick(current_, m)) continue;
      record(m, apply(current_, m, mode));
      return current_;
    }
    throw std::runtime_error(std::string("replay step ") + std::to_string(steps_.size() + 1) + ": no " +
                             rule_name(rule) + " match");
  }
  const Diagram& step(RuleName rule, Direction dir = Direction::Forward) {
    return step(rule, dir, [](const Diagram&, const Match&) { return true; });
  }

  bool uses(RuleName rule) const {
    for (const TraceStep& s : steps_)
      if (s.rule == rule_name(rule)) return true;
    return false;
  }

  std::string to_text() const {
    std::string out = "step 0: start\n" + start_;
    for (std::size_t i = 0; i < steps_.size(); ++i)
      out += "step " + std::to_string(i + 1) + ": " + steps_[i].rule + " at " + steps_[i].match + "\n" +
             steps_[i].snapshot;
    return out;
  }

 private:
  std::string start_;
  std::vector<TraceStep> steps_;
  Diagram current_;
};

}  // namespace zxv
