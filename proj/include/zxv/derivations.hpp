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

// Scripted rewrite chains. Each replay starts from a fixed diagram and
// applies a fixed rule sequence; a step that fails to match throws.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "zxv/semantics.hpp"
#include "zxv/states.hpp"
#include "zxv/trace.hpp"

namespace zxv {

enum class Derivation { Hopf, RuleA, GhzPlug0, GhzPlug1, WPlug0, WPlug1, QkdCore };

inline constexpr std::array<Derivation, 7> kAllDerivations = {Derivation::Hopf,     Derivation::RuleA,
                                                              Derivation::GhzPlug0, Derivation::GhzPlug1,
                                                              Derivation::WPlug0,   Derivation::WPlug1,
                                                              Derivation::QkdCore};

inline const char* derivation_name(Derivation d) {
  switch (d) {
    case Derivation::Hopf: return "hopf";
    case Derivation::RuleA: return "rule_a";
    case Derivation::GhzPlug0: return "ghz_plug0";
    case Derivation::GhzPlug1: return "ghz_plug1";
    case Derivation::WPlug0: return "w_plug0";
    case Derivation::WPlug1: return "w_plug1";
    case Derivation::QkdCore: return "qkd_core";
  }
  return "?";
}

inline std::optional<Derivation> parse_derivation(std::string_view s) {
  for (Derivation d : kAllDerivations)
    if (s == derivation_name(d)) return d;
  return std::nullopt;
}

/// Z(0) and X(0) joined by two parallel edges, one input on Z, one output on X.
inline Diagram hopf_lhs() {
  Diagram d;
  const VertexId z = d.add_vertex(VertexKind::z()), x = d.add_vertex(VertexKind::x());
  d.add_input_wire(z);
  d.add_edge(z, x);
  d.add_edge(z, x);
  d.add_output_wire(x);
  return d;
}

/// Z(alpha) point feeding an X(pi) on its way to the single output.
inline Diagram rule_a_lhs(Phase alpha) {
  Diagram d;
  const VertexId p = d.add_vertex(VertexKind::z(alpha)), x = d.add_vertex(VertexKind::x(Phase::pi()));
  d.add_edge(p, x);
  d.add_output_wire(x);
  return d;
}

namespace detail {

inline auto avoiding(VertexId v) {
  return [v](const Diagram&, const Match& m) { return std::ranges::find(m.vertices, v) == m.vertices.end(); };
}

inline Trace replay_hopf() {
  const Diagram d = hopf_lhs();
  const VertexId z = 0;
  const EdgeId second_parallel = d.edges_between(0, 1).back();
  Trace t(d);
  // unfuse one parallel edge off the Z spider, then put an X identity on
  // the new link so the pair of pairs forms the bialgebra pattern
  t.step(RuleName::S1, Direction::Backward, [&](const Diagram&, const Match& m) {
    return m.vertices[0] == z && m.edges == std::vector<EdgeId>{second_parallel};
  });
  const VertexId split = t.current().next_vertex_id() - 1;
  t.step(RuleName::S2a, Direction::Backward, [&](const Diagram& cur, const Match& m) {
    const Edge& e = cur.edge(m.edges[0]);
    return m.color == VertexType::X && e.touches(z) && e.touches(split);
  });
  t.step(RuleName::B2);
  t.step(RuleName::B1);
  t.step(RuleName::S1);
  t.step(RuleName::S2a);
  return t;
}

inline Trace replay_rule_a(Phase alpha) {
  Trace t(rule_a_lhs(alpha));
  const VertexId p = 0;
  t.step(RuleName::S1, Direction::Backward,
         [&](const Diagram&, const Match& m) { return m.vertices[0] == p && m.edges.empty(); });
  t.step(RuleName::K2);
  t.step(RuleName::K1);
  t.step(RuleName::S1);
  return t;
}

inline const std::array<RuleName, 10> kWPlug0Chain = {RuleName::B1, RuleName::S1, RuleName::S1, RuleName::S2a,
                                                      RuleName::S1, RuleName::B1, RuleName::S1, RuleName::S1,
                                                      RuleName::D2, RuleName::S2a};

inline Trace replay_qkd_core(BasisPoint effect) {
  const Diagram decided = plug(w_state(), Side::Output, 0, BasisPoint::ZPlus);
  const VertexId eff = decided.outputs()[0];
  Trace t(plug(decided, Side::Output, 0, effect));
  // the W z+ chain, leaving the effect alone until the end
  for (std::size_t i = 0; i + 1 < kWPlug0Chain.size(); ++i)
    t.step(kWPlug0Chain[i], Direction::Forward, avoiding(eff));
  t.step(RuleName::S1);
  t.step(RuleName::A);
  return t;
}

}  // namespace detail

/// Replays the named chain. Throws std::runtime_error if a step does not match.
inline Trace replay_derivation(Derivation which) {
  switch (which) {
    case Derivation::Hopf: return detail::replay_hopf();
    case Derivation::RuleA: return detail::replay_rule_a(Phase(1, 3));
    case Derivation::GhzPlug0: {
      Trace t(plug(ghz_state(), Side::Output, 0, BasisPoint::ZPlus));
      t.step(RuleName::B1);
      return t;
    }
    case Derivation::GhzPlug1: {
      Trace t(plug(ghz_state(), Side::Output, 0, BasisPoint::ZMinus));
      t.step(RuleName::K1);
      return t;
    }
    case Derivation::WPlug0: {
      Trace t(plug(w_state(), Side::Output, 0, BasisPoint::ZPlus));
      for (RuleName r : detail::kWPlug0Chain) t.step(r);
      return t;
    }
    case Derivation::WPlug1: {
      Trace t(plug(w_state(), Side::Output, 0, BasisPoint::ZMinus));
      for (RuleName r : {RuleName::K1, RuleName::S1, RuleName::S2a, RuleName::S1, RuleName::K2, RuleName::S1,
                         RuleName::A, RuleName::E, RuleName::B1})
        t.step(r);
      return t;
    }
    case Derivation::QkdCore: return detail::replay_qkd_core(BasisPoint::XMinus);
  }
  throw std::invalid_argument("unknown derivation");
}

/// The stated result of each chain as a matrix (up to scalar): Hopf gives
/// |0><+| (a Z counit and an X unit), rule A the Z(-alpha) point, the plugs
/// their two-qubit states, and the QKD core the x- state on the remaining
/// wire.
inline Matrix derivation_expected(Derivation which) {
  const double r = 1.0 / std::numbers::sqrt2;
  switch (which) {
    case Derivation::Hopf: return Matrix{{r, r}, {0, 0}};
    case Derivation::RuleA: {
      const double a = -std::numbers::pi / 3;
      return Matrix{{1}, {std::polar(1.0, a)}};
    }
    case Derivation::GhzPlug0:
    case Derivation::WPlug1: return Matrix{{1}, {0}, {0}, {0}};
    case Derivation::GhzPlug1: return Matrix{{0}, {0}, {0}, {1}};
    case Derivation::WPlug0: return Matrix{{0}, {1}, {1}, {0}};
    case Derivation::QkdCore: return Matrix{{1}, {-1}};
  }
  throw std::invalid_argument("unknown derivation");
}

}  // namespace zxv
