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

// Procedural matchers and appliers for the rewrite rules. Every rule is
// sound up to a nonzero scalar; the soundness harness checks this against
// the tensor evaluator.
//
//   S1    spider fusion (backward: unfuse one leg, or split off a phase-0 unit)
//   S2a   phase-0 arity-2 spider is a plain wire (backward: insert one)
//   S2b   two adjacent phase-0 arity-2 spiders (a cup/cap zig-zag) straighten
//   B1    phase-0 point copies through a phase-0 spider of the other colour
//   B2    bialgebra: K(2,2) of phase-0 spiders becomes two connected hubs
//   K1    pi copies through a phase-0 spider of the other colour
//   K2    pi commutes past an arity-2 alpha spider of the other colour, alpha -> -alpha
//   C     colour change: spider = opposite colour with H on every leg
//   D1    phase-0 Z point joined to phase-0 X point is the sqrt(2) diamond
//   D2    closed arity-0 spider / diamond scalar normalisation
//   E     supplementarity: points alpha and alpha+pi on a spider of the other colour detach
//   HOPF  Z and X spiders joined by exactly two parallel edges disconnect
//   A     arity-1 alpha spider behind a pi spider of the other colour becomes -alpha

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "zxv/diagram.hpp"

namespace zxv {

enum class RuleName { S1, S2a, S2b, B1, B2, K1, K2, C, D1, D2, E, HOPF, A };

inline constexpr std::array<RuleName, 13> kAllRules = {
    RuleName::S1, RuleName::S2a, RuleName::S2b, RuleName::B1, RuleName::B2, RuleName::K1,   RuleName::K2,
    RuleName::C,  RuleName::D1,  RuleName::D2,  RuleName::E,  RuleName::HOPF, RuleName::A};

inline const char* rule_name(RuleName r) {
  switch (r) {
    case RuleName::S1: return "S1";
    case RuleName::S2a: return "S2a";
    case RuleName::S2b: return "S2b";
    case RuleName::B1: return "B1";
    case RuleName::B2: return "B2";
    case RuleName::K1: return "K1";
    case RuleName::K2: return "K2";
    case RuleName::C: return "C";
    case RuleName::D1: return "D1";
    case RuleName::D2: return "D2";
    case RuleName::E: return "E";
    case RuleName::HOPF: return "HOPF";
    case RuleName::A: return "A";
  }
  return "?";
}

inline std::optional<RuleName> parse_rule_name(std::string_view s) {
  for (RuleName r : kAllRules)
    if (s == rule_name(r)) return r;
  return std::nullopt;
}

enum class Direction { Forward, Backward };

/// Rules with a backward direction.
inline bool has_backward(RuleName r) { return r == RuleName::S1 || r == RuleName::S2a || r == RuleName::C; }

/// UpToScalar drops scalar factors; Strict keeps sqrt(2) bookkeeping with
/// diamonds and refuses steps whose scalar it cannot represent.
enum class ScalarMode { UpToScalar, Strict };

/// One occurrence of a rule's left-hand side. `vertices` holds the pattern
/// roles in the rule's documented order; `edges` the legs involved (the
/// moved leg for S1 backward, the split edge for S2a backward).
struct Match {
  RuleName rule = RuleName::S1;
  Direction direction = Direction::Forward;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  VertexType color = VertexType::Z;  // inserted spider colour (S1/S2a backward)

  friend bool operator==(const Match&, const Match&) = default;

  std::string summary() const {
    std::string s = "[";
    for (std::size_t i = 0; i < vertices.size(); ++i) s += (i ? ", " : "") + std::to_string(vertices[i]);
    s += "]";
    if (!edges.empty()) {
      s += " edges [";
      for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? ", " : "") + std::to_string(edges[i]);
      s += "]";
    }
    if (direction == Direction::Backward) s += " backward";
    return s;
  }
};

class StaleMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Leg {
  EdgeId edge;
  VertexId other;  // == owner for a self-loop end
};

// One entry per leg end; a self-loop yields two entries with the same edge.
inline std::vector<Leg> legs(const Diagram& d, VertexId v) {
  std::vector<Leg> out;
  for (EdgeId e : d.incident_edges(v)) {
    const Edge& ed = d.edge(e);
    if (ed.is_self_loop()) {
      out.push_back({e, v});
      out.push_back({e, v});
    } else {
      out.push_back({e, ed.other(v)});
    }
  }
  return out;
}

inline bool has_self_loop(const Diagram& d, VertexId v) {
  for (EdgeId e : d.incident_edges(v))
    if (d.edge(e).is_self_loop()) return true;
  return false;
}

inline bool is_spider_with(const Diagram& d, VertexId v, VertexType color) {
  return d.kind(v).type == color;
}

inline bool phase_zero(const Diagram& d, VertexId v) { return d.kind(v).is_spider() && d.kind(v).phase.is_zero(); }

// Inserts a fresh vertex of `kind` on every leg end of v: (v,x) becomes
// v - n - x; a self-loop becomes v - n1 - n2 - v.
inline void wrap_legs(Diagram& d, VertexId v, VertexKind kind) {
  for (EdgeId e : d.incident_edges(v)) {
    const Edge ed = d.edge(e);
    d.remove_edge(e);
    if (ed.is_self_loop()) {
      const VertexId n1 = d.add_vertex(kind), n2 = d.add_vertex(kind);
      d.add_edge(v, n1);
      d.add_edge(n1, n2);
      d.add_edge(n2, v);
    } else {
      const VertexId n = d.add_vertex(kind);
      d.add_edge(v, n);
      d.add_edge(n, ed.other(v));
    }
  }
}

// Replaces spider v by a copy of `point` on every remaining leg end, then
// deletes v. Used by the copy rules.
inline void copy_through(Diagram& d, VertexId v, VertexKind point) {
  for (EdgeId e : d.incident_edges(v)) {
    const Edge ed = d.edge(e);
    d.remove_edge(e);
    if (ed.is_self_loop()) {
      const VertexId n1 = d.add_vertex(point), n2 = d.add_vertex(point);
      d.add_edge(n1, n2);
    } else {
      const VertexId n = d.add_vertex(point);
      d.add_edge(n, ed.other(v));
    }
  }
  d.remove_vertex(v);
}

// Copy rules (B1, K1 on a point) rescale by sqrt(2)^(deg-2); strict mode
// can only book-keep deg <= 2 (one diamond when deg == 1).
inline bool strict_copy_ok(const Diagram& d, VertexId v, ScalarMode mode) {
  return mode == ScalarMode::UpToScalar || d.degree(v) <= 2;
}

// ---- S1 ----------------------------------------------------------------

inline void match_s1(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [u, ku] : d.vertices()) {
    if (!ku.is_spider()) continue;
    std::vector<VertexId> seen;
    for (const Leg& l : legs(d, u)) {
      const VertexId v = l.other;
      if (v <= u || d.kind(v).type != ku.type) continue;
      if (std::ranges::find(seen, v) != seen.end()) continue;
      seen.push_back(v);
      out.push_back({RuleName::S1, Direction::Forward, {u, v}, {}, ku.type});
    }
  }
}

inline Diagram apply_s1(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId u = m.vertices[0], v = m.vertices[1];
  d.set_phase(u, d.kind(u).phase + d.kind(v).phase);
  bool consumed = false;
  for (EdgeId e : d.incident_edges(v)) {
    const Edge ed = d.edge(e);
    d.remove_edge(e);
    if (ed.is_self_loop()) {
      d.add_edge(u, u);
    } else if (ed.other(v) == u) {
      if (consumed) d.add_edge(u, u);
      consumed = true;
    } else {
      d.add_edge(u, ed.other(v));
    }
  }
  d.remove_vertex(v);
  return d;
}

inline void match_s1_backward(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [v, k] : d.vertices()) {
    if (!k.is_spider()) continue;
    out.push_back({RuleName::S1, Direction::Backward, {v}, {}, k.type});
    for (EdgeId e : d.incident_edges(v)) out.push_back({RuleName::S1, Direction::Backward, {v}, {e}, k.type});
  }
}

// Splits a phase-0 spider of the same colour off v, joined by one edge,
// taking the listed leg with it (or no leg: a unit).
inline Diagram apply_s1_backward(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId v = m.vertices[0];
  const VertexId w = d.add_vertex({d.kind(v).type, Phase::zero()});
  d.add_edge(v, w);
  if (!m.edges.empty()) {
    const Edge ed = d.edge(m.edges[0]);
    d.remove_edge(m.edges[0]);
    d.add_edge(w, ed.is_self_loop() ? v : ed.other(v));
  }
  return d;
}

// ---- S2 ----------------------------------------------------------------

inline bool is_identity_spider(const Diagram& d, VertexId v) {
  return phase_zero(d, v) && d.degree(v) == 2 && !has_self_loop(d, v);
}

inline void match_s2a(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [v, k] : d.vertices())
    if (k.is_spider() && is_identity_spider(d, v)) out.push_back({RuleName::S2a, Direction::Forward, {v}, {}, k.type});
}

inline Diagram apply_s2a(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId v = m.vertices[0];
  const auto nb = d.neighbors(v);
  d.remove_vertex(v);
  d.add_edge(nb[0], nb[1]);
  return d;
}

inline void match_s2a_backward(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [e, ed] : d.edges()) {
    out.push_back({RuleName::S2a, Direction::Backward, {}, {e}, VertexType::Z});
    out.push_back({RuleName::S2a, Direction::Backward, {}, {e}, VertexType::X});
  }
}

inline Diagram apply_s2a_backward(const Diagram& in, const Match& m) {
  Diagram d = in;
  const Edge ed = d.edge(m.edges[0]);
  d.remove_edge(m.edges[0]);
  const VertexId w = d.add_vertex({m.color, Phase::zero()});
  d.add_edge(ed.a, w);
  d.add_edge(w, ed.b);
  return d;
}

inline void match_s2b(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [u, ku] : d.vertices()) {
    if (!ku.is_spider() || !is_identity_spider(d, u)) continue;
    const auto nu = d.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u || !d.kind(v).is_spider() || !is_identity_spider(d, v)) continue;
      if (d.edges_between(u, v).size() != 1) continue;
      out.push_back({RuleName::S2b, Direction::Forward, {u, v}, {}, ku.type});
    }
  }
}

inline Diagram apply_s2b(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId u = m.vertices[0], v = m.vertices[1];
  VertexId x = -1, y = -1;
  for (VertexId n : d.neighbors(u))
    if (n != v) x = n;
  for (VertexId n : d.neighbors(v))
    if (n != u) y = n;
  d.remove_vertex(u);
  d.remove_vertex(v);
  d.add_edge(x, y);
  return d;
}

// ---- B1 ----------------------------------------------------------------

inline void match_b1(const Diagram& d, ScalarMode mode, std::vector<Match>& out) {
  for (const auto& [s, ks] : d.vertices()) {
    if (!ks.is_spider() || !ks.phase.is_zero() || d.degree(s) != 1) continue;
    const VertexId v = d.neighbors(s)[0];
    if (v == s || d.kind(v).type != other_color(ks.type) || !phase_zero(d, v)) continue;
    if (!strict_copy_ok(d, v, mode)) continue;
    out.push_back({RuleName::B1, Direction::Forward, {s, v}, {}, ks.type});
  }
}

inline Diagram apply_copy(const Diagram& in, const Match& m, ScalarMode mode) {
  Diagram d = in;
  const VertexId s = m.vertices[0], v = m.vertices[1];
  const VertexKind point = d.kind(s);
  const int deg = d.degree(v);
  d.remove_vertex(s);
  copy_through(d, v, point);
  if (mode == ScalarMode::Strict && deg == 1) d.add_vertex(VertexKind::diamond());
  return d;
}

// ---- B2 ----------------------------------------------------------------

// Pattern vertex: phase-0 spider, degree 2 or 3, no self-loop.
inline bool b2_candidate(const Diagram& d, VertexId v, VertexType color) {
  return d.kind(v).type == color && phase_zero(d, v) && (d.degree(v) == 2 || d.degree(v) == 3) &&
         !has_self_loop(d, v);
}

inline void match_b2(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [z1, k1] : d.vertices()) {
    if (!b2_candidate(d, z1, VertexType::Z)) continue;
    std::vector<VertexId> xs;
    for (VertexId n : d.neighbors(z1))
      if (b2_candidate(d, n, VertexType::X) && std::ranges::find(xs, n) == xs.end()) xs.push_back(n);
    std::ranges::sort(xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const VertexId x1 = xs[i], x2 = xs[j];
        std::vector<VertexId> zs;
        for (VertexId n : d.neighbors(x1))
          if (n > z1 && b2_candidate(d, n, VertexType::Z) && std::ranges::find(zs, n) == zs.end()) zs.push_back(n);
        std::ranges::sort(zs);
        for (VertexId z2 : zs) {
          const std::array<VertexId, 4> pat{z1, z2, x1, x2};
          bool ok = true;
          for (VertexId z : {z1, z2})
            for (VertexId x : {x1, x2})
              if (d.edges_between(z, x).size() != 1) ok = false;
          if (!d.edges_between(z1, z2).empty() || !d.edges_between(x1, x2).empty()) ok = false;
          if (!ok) continue;
          // at most one leg may leave the pattern, and the degree accounts for it
          for (VertexId p : pat) {
            int outside = 0;
            for (VertexId n : d.neighbors(p))
              if (std::ranges::find(pat, n) == pat.end()) ++outside;
            if (outside != d.degree(p) - 2) ok = false;
          }
          if (ok) out.push_back({RuleName::B2, Direction::Forward, {z1, z2, x1, x2}, {}, VertexType::Z});
        }
      }
  }
}

inline Diagram apply_b2(const Diagram& in, const Match& m) {
  Diagram d = in;
  const std::array<VertexId, 4> pat{m.vertices[0], m.vertices[1], m.vertices[2], m.vertices[3]};
  auto external = [&](VertexId p) -> std::optional<VertexId> {
    for (VertexId n : d.neighbors(p))
      if (std::ranges::find(pat, n) == pat.end()) return n;
    return std::nullopt;
  };
  std::array<std::optional<VertexId>, 4> ext;
  for (int i = 0; i < 4; ++i) ext[i] = external(pat[i]);
  for (VertexId p : pat) d.remove_vertex(p);
  const VertexId zhub = d.add_vertex(VertexKind::z());
  const VertexId xhub = d.add_vertex(VertexKind::x());
  d.add_edge(zhub, xhub);
  // Z pattern legs land on the X hub and vice versa; a missing leg is a
  // unit of the pattern vertex's own colour.
  for (int i = 0; i < 2; ++i) {
    const VertexId tgt = ext[i] ? *ext[i] : d.add_vertex(VertexKind::z());
    d.add_edge(xhub, tgt);
  }
  for (int i = 2; i < 4; ++i) {
    const VertexId tgt = ext[i] ? *ext[i] : d.add_vertex(VertexKind::x());
    d.add_edge(zhub, tgt);
  }
  return d;
}

// ---- K1 / K2 / A -------------------------------------------------------

inline bool pi_spider(const Diagram& d, VertexId v) { return d.kind(v).is_spider() && d.kind(v).phase.is_pi(); }

inline void match_k1(const Diagram& d, ScalarMode mode, std::vector<Match>& out) {
  for (const auto& [p, kp] : d.vertices()) {
    if (!pi_spider(d, p) || has_self_loop(d, p)) continue;
    const int deg = d.degree(p);
    if (deg != 1 && deg != 2) continue;
    const auto nb = d.neighbors(p);
    if (deg == 2 && nb[0] == nb[1]) continue;
    for (VertexId v : nb) {
      if (d.kind(v).type != other_color(kp.type) || !phase_zero(d, v)) continue;
      if (deg == 1 && !strict_copy_ok(d, v, mode)) continue;
      out.push_back({RuleName::K1, Direction::Forward, {p, v}, {}, kp.type});
    }
  }
}

inline Diagram apply_k1(const Diagram& in, const Match& m, ScalarMode mode) {
  const VertexId p = m.vertices[0], v = m.vertices[1];
  if (in.degree(p) == 1) return apply_copy(in, m, mode);
  Diagram d = in;
  const VertexKind pi = d.kind(p);
  VertexId w = -1;
  for (VertexId n : d.neighbors(p))
    if (n != v) w = n;
  d.remove_vertex(p);
  wrap_legs(d, v, pi);
  d.add_edge(w, v);
  return d;
}

inline void match_k2(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [p, kp] : d.vertices()) {
    if (!pi_spider(d, p) || d.degree(p) != 2 || has_self_loop(d, p)) continue;
    const auto nb = d.neighbors(p);
    if (nb[0] == nb[1]) continue;
    for (VertexId v : nb) {
      if (d.kind(v).type != other_color(kp.type) || d.degree(v) != 2 || has_self_loop(d, v)) continue;
      if (d.edges_between(p, v).size() != 1) continue;
      out.push_back({RuleName::K2, Direction::Forward, {p, v}, {}, kp.type});
    }
  }
}

inline Diagram apply_k2(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId p = m.vertices[0], v = m.vertices[1];
  const VertexKind pi = d.kind(p);
  VertexId w = -1;
  for (VertexId n : d.neighbors(p))
    if (n != v) w = n;
  d.remove_vertex(p);
  d.set_phase(v, -d.kind(v).phase);
  wrap_legs(d, v, pi);
  d.add_edge(w, v);
  return d;
}

inline void match_a(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [p, kp] : d.vertices()) {
    if (!kp.is_spider() || d.degree(p) != 1) continue;
    const VertexId x = d.neighbors(p)[0];
    if (x == p || d.kind(x).type != other_color(kp.type) || !pi_spider(d, x)) continue;
    if (d.degree(x) != 2 || has_self_loop(d, x) || d.edges_between(p, x).size() != 1) continue;
    out.push_back({RuleName::A, Direction::Forward, {p, x}, {}, kp.type});
  }
}

inline Diagram apply_a(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId p = m.vertices[0], x = m.vertices[1];
  VertexId w = -1;
  for (VertexId n : d.neighbors(x))
    if (n != p) w = n;
  d.remove_vertex(x);
  d.set_phase(p, -d.kind(p).phase);
  d.add_edge(p, w);
  return d;
}

// ---- C -----------------------------------------------------------------

inline void match_c(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [v, k] : d.vertices())
    if (k.is_spider()) out.push_back({RuleName::C, Direction::Forward, {v}, {}, k.type});
}

inline Diagram apply_c(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId v = m.vertices[0];
  d.set_kind(v, {other_color(d.kind(v).type), d.kind(v).phase});
  wrap_legs(d, v, VertexKind::h());
  return d;
}

inline void match_c_backward(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [v, k] : d.vertices()) {
    if (!k.is_spider() || d.degree(v) == 0 || has_self_loop(d, v)) continue;
    std::vector<VertexId> hs;
    bool ok = true;
    for (VertexId n : d.neighbors(v)) {
      if (d.kind(n).type != VertexType::H || std::ranges::find(hs, n) != hs.end()) {
        ok = false;
        break;
      }
      hs.push_back(n);
    }
    if (!ok) continue;
    std::ranges::sort(hs);
    std::vector<VertexId> roles{v};
    roles.insert(roles.end(), hs.begin(), hs.end());
    out.push_back({RuleName::C, Direction::Backward, roles, {}, k.type});
  }
}

inline Diagram apply_c_backward(const Diagram& in, const Match& m) {
  Diagram d = in;
  const VertexId v = m.vertices[0];
  for (std::size_t i = 1; i < m.vertices.size(); ++i) {
    const VertexId h = m.vertices[i];
    VertexId y = -1;
    for (VertexId n : d.neighbors(h))
      if (n != v) y = n;
    d.remove_vertex(h);
    d.add_edge(v, y);
  }
  d.set_kind(v, {other_color(d.kind(v).type), d.kind(v).phase});
  return d;
}

// ---- D1 / D2 -----------------------------------------------------------

inline void match_d1(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [z, kz] : d.vertices()) {
    if (kz.type != VertexType::Z || !kz.phase.is_zero() || d.degree(z) != 1) continue;
    const VertexId x = d.neighbors(z)[0];
    if (d.kind(x).type != VertexType::X || !phase_zero(d, x) || d.degree(x) != 1) continue;
    out.push_back({RuleName::D1, Direction::Forward, {z, x}, {}, VertexType::Z});
  }
}

inline Diagram apply_d1(const Diagram& in, const Match& m, ScalarMode mode) {
  Diagram d = in;
  d.remove_vertex(m.vertices[0]);
  d.remove_vertex(m.vertices[1]);
  if (mode == ScalarMode::Strict) d.add_vertex(VertexKind::diamond());
  return d;
}

inline void match_d2(const Diagram& d, ScalarMode mode, std::vector<Match>& out) {
  for (const auto& [v, k] : d.vertices()) {
    if (d.degree(v) != 0) continue;
    if (mode == ScalarMode::Strict) {
      if (k.is_spider() && k.phase.is_zero()) out.push_back({RuleName::D2, Direction::Forward, {v}, {}, k.type});
    } else if (k.type == VertexType::Diamond || (k.is_spider() && !k.phase.is_pi())) {
      out.push_back({RuleName::D2, Direction::Forward, {v}, {}, k.type});
    }
  }
}

// Strict: arity-0 phase-0 spider (value 2) becomes two diamonds.
// Up to scalar: nonzero closed scalars are dropped.
inline Diagram apply_d2(const Diagram& in, const Match& m, ScalarMode mode) {
  Diagram d = in;
  d.remove_vertex(m.vertices[0]);
  if (mode == ScalarMode::Strict) {
    d.add_vertex(VertexKind::diamond());
    d.add_vertex(VertexKind::diamond());
  }
  return d;
}

// ---- E -----------------------------------------------------------------

inline void match_e(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [x, kx] : d.vertices()) {
    if (!kx.is_spider() || d.degree(x) < 2) continue;
    std::vector<VertexId> points;
    for (VertexId n : d.neighbors(x))
      if (n != x && d.kind(n).type == other_color(kx.type) && d.degree(n) == 1) points.push_back(n);
    std::ranges::sort(points);
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        const Phase a = d.kind(points[i]).phase, b = d.kind(points[j]).phase;
        if ((b - a) != Phase::pi()) continue;
        if (a.is_pauli()) continue;  // the detached scalar 1 - e^{2i alpha} vanishes
        out.push_back({RuleName::E, Direction::Forward, {x, points[i], points[j]}, {}, kx.type});
      }
  }
}

inline Diagram apply_e(const Diagram& in, const Match& m) {
  Diagram d = in;
  d.remove_vertex(m.vertices[1]);
  d.remove_vertex(m.vertices[2]);
  return d;
}

// ---- HOPF --------------------------------------------------------------

inline void match_hopf(const Diagram& d, std::vector<Match>& out) {
  for (const auto& [z, kz] : d.vertices()) {
    if (kz.type != VertexType::Z) continue;
    std::vector<VertexId> xs;
    for (VertexId n : d.neighbors(z))
      if (d.kind(n).type == VertexType::X && std::ranges::find(xs, n) == xs.end()) xs.push_back(n);
    std::ranges::sort(xs);
    for (VertexId x : xs)
      if (d.edges_between(z, x).size() == 2) out.push_back({RuleName::HOPF, Direction::Forward, {z, x}, {}, VertexType::Z});
  }
}

inline Diagram apply_hopf(const Diagram& in, const Match& m) {
  Diagram d = in;
  for (EdgeId e : d.edges_between(m.vertices[0], m.vertices[1])) d.remove_edge(e);
  return d;
}

}  // namespace detail

/// All occurrences of the rule's left-hand side, sorted by the matched
/// vertex ids (then edges).
inline std::vector<Match> find_matches(RuleName rule, const Diagram& d, Direction dir = Direction::Forward,
                                       ScalarMode mode = ScalarMode::UpToScalar) {
  std::vector<Match> out;
  if (dir == Direction::Backward) {
    switch (rule) {
      case RuleName::S1: detail::match_s1_backward(d, out); break;
      case RuleName::S2a: detail::match_s2a_backward(d, out); break;
      case RuleName::C: detail::match_c_backward(d, out); break;
      default: break;
    }
  } else {
    switch (rule) {
      case RuleName::S1: detail::match_s1(d, out); break;
      case RuleName::S2a: detail::match_s2a(d, out); break;
      case RuleName::S2b: detail::match_s2b(d, out); break;
      case RuleName::B1: detail::match_b1(d, mode, out); break;
      case RuleName::B2: detail::match_b2(d, out); break;
      case RuleName::K1: detail::match_k1(d, mode, out); break;
      case RuleName::K2: detail::match_k2(d, out); break;
      case RuleName::C: detail::match_c(d, out); break;
      case RuleName::D1: detail::match_d1(d, out); break;
      case RuleName::D2: detail::match_d2(d, mode, out); break;
      case RuleName::E: detail::match_e(d, out); break;
      case RuleName::HOPF: detail::match_hopf(d, out); break;
      case RuleName::A: detail::match_a(d, out); break;
    }
  }
  std::ranges::sort(out, [](const Match& a, const Match& b) {
    return std::tie(a.vertices, a.edges, a.color) < std::tie(b.vertices, b.edges, b.color);
  });
  return out;
}

/// Applies a match found on `d` (or on an unchanged copy of it). Throws
/// StaleMatch if the pattern no longer occurs.
inline Diagram apply(const Diagram& d, const Match& m, ScalarMode mode = ScalarMode::UpToScalar) {
  const auto current = find_matches(m.rule, d, m.direction, mode);
  if (std::ranges::find(current, m) == current.end())
    throw StaleMatch(std::string("stale ") + rule_name(m.rule) + " match at " + m.summary());
  if (m.direction == Direction::Backward) {
    switch (m.rule) {
      case RuleName::S1: return detail::apply_s1_backward(d, m);
      case RuleName::S2a: return detail::apply_s2a_backward(d, m);
      case RuleName::C: return detail::apply_c_backward(d, m);
      default: break;
    }
  }
  switch (m.rule) {
    case RuleName::S1: return detail::apply_s1(d, m);
    case RuleName::S2a: return detail::apply_s2a(d, m);
    case RuleName::S2b: return detail::apply_s2b(d, m);
    case RuleName::B1: return detail::apply_copy(d, m, mode);
    case RuleName::B2: return detail::apply_b2(d, m);
    case RuleName::K1: return detail::apply_k1(d, m, mode);
    case RuleName::K2: return detail::apply_k2(d, m);
    case RuleName::C: return detail::apply_c(d, m);
    case RuleName::D1: return detail::apply_d1(d, m, mode);
    case RuleName::D2: return detail::apply_d2(d, m, mode);
    case RuleName::E: return detail::apply_e(d, m);
    case RuleName::HOPF: return detail::apply_hopf(d, m);
    case RuleName::A: return detail::apply_a(d, m);
  }
  throw StaleMatch("unknown rule");
}

/// A rule bound to a direction and scalar mode.
struct RewriteRule {
  RuleName name = RuleName::S1;
  Direction direction = Direction::Forward;
  ScalarMode mode = ScalarMode::UpToScalar;

  std::vector<Match> find_matches(const Diagram& d) const { return zxv::find_matches(name, d, direction, mode); }
  Diagram apply(const Diagram& d, const Match& m) const { return zxv::apply(d, m, mode); }
};

}  // namespace zxv
