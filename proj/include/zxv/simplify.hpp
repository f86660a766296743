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

// Bounded simplification. `safe` only takes steps that shrink
// vertices + edges, so it always terminates. `full` also tries the
// non-shrinking rules, but only a step that unlocks a shrinking one, never
// revisiting a diagram and never growing past a budget.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

#include "zxv/isomorphism.hpp"
#include "zxv/trace.hpp"

namespace zxv {

enum class Strategy { Safe, Full };

struct SimplifyOptions {
  Strategy strategy = Strategy::Safe;
  int step_limit = 1000;
  ScalarMode mode = ScalarMode::UpToScalar;
  bool reverse_matches = false;  // try matches in descending order
  std::size_t growth_budget = 6;  // full: max measure above the input's
};

struct SimplifyResult {
  Diagram diagram;
  Trace trace;
  bool step_limit_reached = false;
};

inline constexpr std::array<RuleName, 7> kSafePriority = {RuleName::S2a, RuleName::S2b, RuleName::S1, RuleName::HOPF,
                                                          RuleName::B1,  RuleName::D1,  RuleName::D2};

struct RuleStep {
  RuleName rule;
  Direction direction;
};

inline constexpr std::array<RuleStep, 7> kFullExtras = {{{RuleName::E, Direction::Forward},
                                                         {RuleName::K1, Direction::Forward},
                                                         {RuleName::A, Direction::Forward},
                                                         {RuleName::B2, Direction::Forward},
                                                         {RuleName::K2, Direction::Forward},
                                                         {RuleName::C, Direction::Backward},
                                                         {RuleName::C, Direction::Forward}}};

namespace detail {

template <class Accept>
std::optional<std::pair<Match, Diagram>> first_step(const Diagram& d, RuleName rule, Direction dir,
                                                    const SimplifyOptions& opt, Accept accept) {
  auto ms = find_matches(rule, d, dir, opt.mode);
  if (opt.reverse_matches) std::ranges::reverse(ms);
  for (const Match& m : ms) {
    Diagram r = apply(d, m, opt.mode);
    if (accept(r)) return std::pair{m, std::move(r)};
  }
  return std::nullopt;
}

inline bool can_shrink(const Diagram& d, const SimplifyOptions& opt) {
  const auto shrinks = [&](const Diagram& r) { return r.size_measure() < d.size_measure(); };
  for (RuleName r : kSafePriority)
    if (first_step(d, r, Direction::Forward, opt, shrinks)) return true;
  return false;
}

}  // namespace detail

inline SimplifyResult simplify(const Diagram& d, const SimplifyOptions& opt = {}) {
  SimplifyResult res{d, Trace(d), false};
  std::set<std::uint64_t> seen{structural_hash(d)};
  const std::size_t budget = d.size_measure() + opt.growth_budget;
  while (true) {
    const Diagram& cur = res.trace.current();
    std::optional<std::pair<Match, Diagram>> next;
    const auto shrinks = [&](const Diagram& r) { return r.size_measure() < cur.size_measure(); };
    for (RuleName r : kSafePriority) {
      next = detail::first_step(cur, r, Direction::Forward, opt, shrinks);
      if (next) break;
    }
    if (!next && opt.strategy == Strategy::Full) {
      const auto fresh = [&](const Diagram& r) {
        return r.size_measure() <= budget && !seen.contains(structural_hash(r)) && detail::can_shrink(r, opt);
      };
      for (const RuleStep& rs : kFullExtras) {
        next = detail::first_step(cur, rs.rule, rs.direction, opt, fresh);
        if (next) break;
      }
    }
    if (!next) break;
    if (static_cast<int>(res.trace.size()) >= opt.step_limit) {
      res.step_limit_reached = true;
      break;
    }
    seen.insert(structural_hash(next->second));
    res.trace.record(next->first, next->second);
  }
  res.diagram = res.trace.current();
  return res;
}

}  // namespace zxv
