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

// Randomised soundness checking: plant a rule's left-hand side inside a
// random context, apply every match, and compare the semantics.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zxv/rules.hpp"
#include "zxv/semantics.hpp"
#include "zxv/zxg.hpp"

namespace zxv {

namespace detail {

class DiagramBuilder {
 public:
  DiagramBuilder(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    rng_.seed(seq);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Phase phase() {
    static const Phase kCommon[] = {Phase(0), Phase(1, 2), Phase(1), Phase(3, 2)};
    if (coin(0.8)) return kCommon[uniform(0, 3)];
    return Phase(uniform(1, 11), 6);
  }
  // Phases that avoid 0 and pi.
  Phase generic_phase() {
    static const Phase kGeneric[] = {Phase(1, 2), Phase(3, 2), Phase(1, 3), Phase(5, 4), Phase(7, 6)};
    return kGeneric[uniform(0, 4)];
  }
  VertexType color() { return coin() ? VertexType::Z : VertexType::X; }

  Diagram& diagram() { return d_; }

  VertexId spider(VertexType c, Phase p) {
    const VertexId v = d_.add_vertex({c, p});
    context_.push_back(v);
    return v;
  }

  // Random spiders with random edges among them.
  void context(int spiders) {
    std::vector<VertexId> made;
    for (int i = 0; i < spiders; ++i) made.push_back(spider(color(), phase()));
    for (std::size_t i = 0; i < made.size(); ++i)
      for (std::size_t j = i + 1; j < made.size(); ++j)
        if (coin(0.4)) d_.add_edge(made[i], made[j]);
  }

  // Joins v to a context spider (H in between sometimes) or to a new
  // boundary while the interface budget lasts.
  void leg(VertexId v, const std::vector<VertexId>& avoid = {}) {
    std::vector<VertexId> targets;
    for (VertexId c : context_)
      if (std::ranges::find(avoid, c) == avoid.end()) targets.push_back(c);
    if (boundaries_ < 4 && (targets.empty() || coin(0.5))) {
      ++boundaries_;
      if (coin()) d_.add_input_wire(v);
      else d_.add_output_wire(v);
      return;
    }
    if (targets.empty()) {
      targets.push_back(spider(color(), phase()));
    }
    const VertexId t = targets[uniform(0, static_cast<int>(targets.size()) - 1)];
    if (coin(0.2)) {
      const VertexId h = d_.add_vertex(VertexKind::h());
      d_.add_edge(v, h);
      d_.add_edge(h, t);
    } else {
      d_.add_edge(v, t);
    }
  }

  void legs(VertexId v, int n, const std::vector<VertexId>& avoid = {}) {
    for (int i = 0; i < n; ++i) leg(v, avoid);
  }

 private:
  std::mt19937_64 rng_;
  Diagram d_;
  std::vector<VertexId> context_;
  int boundaries_ = 0;
};

}  // namespace detail

/// A random valid diagram containing at least one instance of `rule`'s
/// left-hand side (for backward rules, any spider or edge will do).
inline Diagram random_instance(RuleName rule, std::uint64_t seed, std::uint64_t index = 0) {
  detail::DiagramBuilder b(seed, index);
  Diagram& d = b.diagram();
  b.context(b.uniform(0, 3));
  const VertexType c = b.color(), o = other_color(c);
  switch (rule) {
    case RuleName::S1: {
      const VertexId u = d.add_vertex({c, b.phase()}), v = d.add_vertex({c, b.phase()});
      const int k = b.uniform(1, 2);
      for (int i = 0; i < k; ++i) d.add_edge(u, v);
      b.legs(u, b.uniform(0, 2));
      b.legs(v, b.uniform(0, 2));
      if (b.coin(0.2)) d.add_edge(v, v);
      break;
    }
    case RuleName::S2a: {
      const VertexId v = d.add_vertex({c, Phase::zero()});
      b.legs(v, 2);
      break;
    }
    case RuleName::S2b: {
      const VertexId u = d.add_vertex({c, Phase::zero()}), v = d.add_vertex({b.color(), Phase::zero()});
      d.add_edge(u, v);
      b.leg(u);
      b.leg(v);
      break;
    }
    case RuleName::B1:
    case RuleName::K1: {
      const Phase p = rule == RuleName::B1 ? Phase::zero() : Phase::pi();
      const VertexId s = d.add_vertex({c, p}), v = d.add_vertex({o, Phase::zero()});
      d.add_edge(s, v);
      if (rule == RuleName::K1 && b.coin()) b.leg(s);
      b.legs(v, b.uniform(0, 3));
      if (b.coin(0.15)) d.add_edge(v, v);
      break;
    }
    case RuleName::B2: {
      const VertexId z1 = d.add_vertex(VertexKind::z()), z2 = d.add_vertex(VertexKind::z());
      const VertexId x1 = d.add_vertex(VertexKind::x()), x2 = d.add_vertex(VertexKind::x());
      for (VertexId z : {z1, z2})
        for (VertexId x : {x1, x2}) d.add_edge(z, x);
      for (VertexId v : {z1, z2, x1, x2})
        if (b.coin(0.75)) b.leg(v, {z1, z2, x1, x2});
      break;
    }
    case RuleName::K2:
    case RuleName::A: {
      const VertexId p = d.add_vertex({o, Phase::pi()}), v = d.add_vertex({c, b.phase()});
      d.add_edge(p, v);
      b.leg(p);
      if (rule == RuleName::K2) b.leg(v);
      break;
    }
    case RuleName::C: {
      const VertexId v = d.add_vertex({c, b.phase()});
      b.legs(v, b.uniform(0, 3));
      if (b.coin(0.2)) d.add_edge(v, v);
      if (b.coin(0.4)) {
        const VertexId w = d.add_vertex({o, b.phase()});
        for (int i = 0; i < 2; ++i) {
          const VertexId h = d.add_vertex(VertexKind::h());
          d.add_edge(w, h);
          b.leg(h);
        }
      }
      break;
    }
    case RuleName::D1: {
      const VertexId z = d.add_vertex(VertexKind::z()), x = d.add_vertex(VertexKind::x());
      d.add_edge(z, x);
      break;
    }
    case RuleName::D2: {
      if (b.coin(0.3)) d.add_vertex(VertexKind::diamond());
      d.add_vertex({c, b.coin() ? Phase::zero() : b.generic_phase()});
      break;
    }
    case RuleName::E: {
      const VertexId x = d.add_vertex({c, b.phase()});
      const Phase a = b.generic_phase();
      const VertexId p = d.add_vertex({o, a}), q = d.add_vertex({o, a + Phase::pi()});
      d.add_edge(x, p);
      d.add_edge(x, q);
      b.legs(x, b.uniform(0, 2));
      break;
    }
    case RuleName::HOPF: {
      const VertexId z = d.add_vertex({VertexType::Z, b.phase()}), x = d.add_vertex({VertexType::X, b.phase()});
      d.add_edge(z, x);
      d.add_edge(z, x);
      b.legs(z, b.uniform(0, 2));
      b.legs(x, b.uniform(0, 2));
      break;
    }
  }
  return d;
}

struct SoundnessFailure {
  std::string match;
  std::string before;  // .zxg text
  std::string after;
  double residual = 0;
};

struct SoundnessReport {
  RuleName rule = RuleName::S1;
  int samples = 0;
  int matches_checked = 0;
  std::vector<SoundnessFailure> failures;

  bool passed() const { return failures.empty() && matches_checked > 0; }
};

namespace detail {

// Numerically zero matrices are left alone so they still compare as zero.
inline Matrix normalized(const Matrix& m, double tol) {
  const double n = m.norm_inf();
  return n > tol ? Complex(1.0 / n) * m : m;
}

}  // namespace detail

/// Applies every match (every direction the rule has) on `samples` random
/// instances and checks each result equals its source up to a nonzero
/// scalar. In strict mode the copy and scalar rules must hold exactly.
inline SoundnessReport check_soundness(RuleName rule, int samples, std::uint64_t seed,
                                       ScalarMode mode = ScalarMode::UpToScalar, double tol = 1e-9) {
  SoundnessReport rep;
  rep.rule = rule;
  rep.samples = samples;
  const bool exact = mode == ScalarMode::Strict &&
                     (rule == RuleName::B1 || rule == RuleName::K1 || rule == RuleName::D1 || rule == RuleName::D2);
  for (int s = 0; s < samples; ++s) {
    const Diagram d = random_instance(rule, seed, static_cast<std::uint64_t>(s));
    const Matrix before = evaluate(d);
    std::vector<Direction> dirs{Direction::Forward};
    if (has_backward(rule)) dirs.push_back(Direction::Backward);
    for (Direction dir : dirs) {
      for (const Match& m : find_matches(rule, d, dir, mode)) {
        const Diagram r = apply(d, m, mode);
        const Matrix after = evaluate(r);
        ++rep.matches_checked;
        bool ok;
        double residual;
        if (exact) {
          residual = max_abs_diff(before, after);
          ok = r.is_valid() && residual <= tol * std::max(1.0, before.norm_inf());
        } else {
          const auto v = equal_up_to_scalar(detail::normalized(after, tol), detail::normalized(before, tol), tol);
          residual = v.max_residual;
          ok = r.is_valid() && v.equal;
        }
        if (!ok) rep.failures.push_back({m.summary(), serialize_zxg(d), serialize_zxg(r), residual});
      }
    }
  }
  return rep;
}

}  // namespace zxv
