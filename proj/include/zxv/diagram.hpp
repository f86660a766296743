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

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zxv/phase.hpp"

namespace zxv {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

enum class VertexType { Z, X, H, Boundary, Diamond };

inline const char* type_name(VertexType t) {
  switch (t) {
    case VertexType::Z: return "Z";
    case VertexType::X: return "X";
    case VertexType::H: return "H";
    case VertexType::Boundary: return "B";
    case VertexType::Diamond: return "D";
  }
  return "?";
}

struct VertexKind {
  VertexType type = VertexType::Z;
  Phase phase;  // meaningful for Z and X only

  static VertexKind z(Phase p = {}) { return {VertexType::Z, p}; }
  static VertexKind x(Phase p = {}) { return {VertexType::X, p}; }
  static VertexKind h() { return {VertexType::H, {}}; }
  static VertexKind boundary() { return {VertexType::Boundary, {}}; }
  static VertexKind diamond() { return {VertexType::Diamond, {}}; }

  bool is_spider() const { return type == VertexType::Z || type == VertexType::X; }

  friend bool operator==(const VertexKind& a, const VertexKind& b) {
    if (a.type != b.type) return false;
    return !a.is_spider() || a.phase == b.phase;
  }
};

/// The opposite spider colour. Only valid for Z and X.
inline VertexType other_color(VertexType t) {
  return t == VertexType::Z ? VertexType::X : VertexType::Z;
}

struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  bool is_self_loop() const { return a == b; }
  bool touches(VertexId v) const { return a == v || b == v; }
  VertexId other(VertexId v) const { return a == v ? b : a; }
};

/// Structural violation of the diagram invariants. `vertex` names the
/// offending vertex when there is one, otherwise -1.
class DiagramError : public std::runtime_error {
 public:
  DiagramError(const std::string& what, VertexId vertex = -1)
      : std::runtime_error(what), vertex_(vertex) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

/// Maximum degree a vertex of this type may ever reach, or -1 for unbounded.
inline int degree_cap(VertexType t) {
  switch (t) {
    case VertexType::H: return 2;
    case VertexType::Boundary: return 1;
    case VertexType::Diamond: return 0;
    default: return -1;
  }
}

/// Open multigraph of ZX generators. Vertex and edge ids come from
/// per-diagram monotone counters and are never reused. Self-loops and
/// parallel edges are allowed; a self-loop contributes 2 to the degree.
class Diagram {
 public:
  VertexId add_vertex(VertexKind kind) {
    const VertexId id = next_vertex_++;
    vertices_.emplace(id, kind);
    degree_.emplace(id, 0);
    return id;
  }

  EdgeId add_edge(VertexId a, VertexId b) {
    check_vertex(a);
    check_vertex(b);
    const int add_a = a == b ? 2 : 1;
    check_cap(a, degree_.at(a) + add_a);
    if (a != b) check_cap(b, degree_.at(b) + 1);
    const EdgeId id = next_edge_++;
    edges_.emplace(id, Edge{std::min(a, b), std::max(a, b)});
    degree_[a] += add_a;
    if (a != b) degree_[b] += 1;
    return id;
  }

  void remove_edge(EdgeId e) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw DiagramError("unknown edge " + std::to_string(e));
    const Edge ed = it->second;
    if (ed.is_self_loop()) {
      degree_[ed.a] -= 2;
    } else {
      degree_[ed.a] -= 1;
      degree_[ed.b] -= 1;
    }
    edges_.erase(it);
  }

  /// Removes the vertex, its incident edges, and any interface slot it held.
  void remove_vertex(VertexId v) {
    check_vertex(v);
    for (EdgeId e : incident_edges(v)) remove_edge(e);
    vertices_.erase(v);
    degree_.erase(v);
    std::erase(inputs_, v);
    std::erase(outputs_, v);
  }

  void set_kind(VertexId v, VertexKind kind) {
    check_vertex(v);
    const int cap = degree_cap(kind.type);
    if (cap >= 0 && degree_.at(v) > cap)
      throw DiagramError("vertex " + std::to_string(v) + " would exceed degree cap", v);
    vertices_[v] = kind;
  }

  void set_phase(VertexId v, Phase p) {
    check_vertex(v);
    vertices_[v].phase = p;
  }

  void add_input(VertexId v) { inputs_.push_back(v); }
  void add_output(VertexId v) { outputs_.push_back(v); }
  void set_inputs(std::vector<VertexId> ids) { inputs_ = std::move(ids); }
  void set_outputs(std::vector<VertexId> ids) { outputs_ = std::move(ids); }

  /// Appends a fresh boundary vertex wired to `v` and registers it as an input.
  VertexId add_input_wire(VertexId v) {
    const VertexId b = add_vertex(VertexKind::boundary());
    add_edge(b, v);
    inputs_.push_back(b);
    return b;
  }
  VertexId add_output_wire(VertexId v) {
    const VertexId b = add_vertex(VertexKind::boundary());
    add_edge(v, b);
    outputs_.push_back(b);
    return b;
  }

  const std::map<VertexId, VertexKind>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool has_edge(EdgeId e) const { return edges_.contains(e); }
  const VertexKind& kind(VertexId v) const {
    check_vertex(v);
    return vertices_.at(v);
  }
  const Edge& edge(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw DiagramError("unknown edge " + std::to_string(e));
    return it->second;
  }

  int degree(VertexId v) const {
    check_vertex(v);
    return degree_.at(v);
  }

  /// Incident edges in ascending edge id; a self-loop is listed once.
  std::vector<EdgeId> incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (const auto& [id, e] : edges_)
      if (e.touches(v)) out.push_back(id);
    return out;
  }

  /// One entry per leg (self-loops contribute the vertex twice), in edge order.
  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& [id, e] : edges_) {
      if (!e.touches(v)) continue;
      if (e.is_self_loop()) {
        out.push_back(v);
        out.push_back(v);
      } else {
        out.push_back(e.other(v));
      }
    }
    return out;
  }

  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const {
    std::vector<EdgeId> out;
    const VertexId lo = std::min(a, b), hi = std::max(a, b);
    for (const auto& [id, e] : edges_)
      if (e.a == lo && e.b == hi) out.push_back(id);
    return out;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Termination measure for the size-decreasing rewrite strategy.
  std::size_t size_measure() const { return vertices_.size() + edges_.size(); }

  bool is_boundary(VertexId v) const { return kind(v).type == VertexType::Boundary; }
  bool is_spider(VertexId v) const { return kind(v).is_spider(); }
  bool is_input(VertexId v) const { return std::ranges::find(inputs_, v) != inputs_.end(); }
  bool is_output(VertexId v) const { return std::ranges::find(outputs_, v) != outputs_.end(); }

  VertexId next_vertex_id() const { return next_vertex_; }

  /// Throws DiagramError naming the first offending vertex.
  void validate() const {
    std::set<VertexId> seen;
    auto check_interface = [&](const std::vector<VertexId>& ids, const char* side) {
      for (VertexId v : ids) {
        if (!vertices_.contains(v))
          throw DiagramError(std::string(side) + " references unknown vertex " + std::to_string(v), v);
        if (vertices_.at(v).type != VertexType::Boundary)
          throw DiagramError(std::string(side) + " vertex " + std::to_string(v) + " is not a boundary", v);
        if (!seen.insert(v).second)
          throw DiagramError("boundary " + std::to_string(v) + " appears twice in the interface", v);
      }
    };
    check_interface(inputs_, "inputs");
    check_interface(outputs_, "outputs");
    for (const auto& [v, k] : vertices_) {
      const int d = degree_.at(v);
      switch (k.type) {
        case VertexType::H:
          if (d != 2)
            throw DiagramError("H vertex " + std::to_string(v) + " has degree " + std::to_string(d) + ", expected 2", v);
          break;
        case VertexType::Boundary:
          if (d != 1)
            throw DiagramError("boundary vertex " + std::to_string(v) + " has degree " + std::to_string(d) + ", expected 1", v);
          if (!seen.contains(v))
            throw DiagramError("boundary vertex " + std::to_string(v) + " is not in the interface", v);
          break;
        case VertexType::Diamond:
          if (d != 0) throw DiagramError("diamond vertex " + std::to_string(v) + " has edges", v);
          break;
        default: break;
      }
    }
    for (const auto& [id, e] : edges_)
      if (!vertices_.contains(e.a) || !vertices_.contains(e.b))
        throw DiagramError("edge " + std::to_string(id) + " references an unknown vertex");
  }

  bool is_valid() const {
    try {
      validate();
      return true;
    } catch (const DiagramError&) {
      return false;
    }
  }

  /// Bulk construction with caller-chosen vertex ids; edges get ids in order.
  static Diagram from_parts(const std::map<VertexId, VertexKind>& vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& edges,
                            std::vector<VertexId> inputs, std::vector<VertexId> outputs) {
    Diagram d;
    for (const auto& [v, k] : vertices) {
      if (v < 0) throw DiagramError("negative vertex id", v);
      d.vertices_.emplace(v, k);
      d.degree_.emplace(v, 0);
      d.next_vertex_ = std::max(d.next_vertex_, v + 1);
    }
    for (const auto& [a, b] : edges) d.add_edge(a, b);
    d.inputs_ = std::move(inputs);
    d.outputs_ = std::move(outputs);
    return d;
  }

 private:
  void check_vertex(VertexId v) const {
    if (!vertices_.contains(v)) throw DiagramError("unknown vertex " + std::to_string(v), v);
  }
  void check_cap(VertexId v, int new_degree) const {
    const int cap = degree_cap(vertices_.at(v).type);
    if (cap >= 0 && new_degree > cap)
      throw DiagramError(std::string(type_name(vertices_.at(v).type)) + " vertex " + std::to_string(v) +
                             " would exceed its degree cap of " + std::to_string(cap),
                         v);
  }

  std::map<VertexId, VertexKind> vertices_;
  std::map<VertexId, int> degree_;
  std::map<EdgeId, Edge> edges_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

inline Diagram new_diagram() { return {}; }

namespace detail {

/// Copies every vertex and edge of `src` into `dst`, returning the id map.
inline std::map<VertexId, VertexId> embed(Diagram& dst, const Diagram& src) {
  std::map<VertexId, VertexId> map;
  for (const auto& [v, k] : src.vertices()) map[v] = dst.add_vertex(k);
  for (const auto& [id, e] : src.edges()) dst.add_edge(map.at(e.a), map.at(e.b));
  return map;
}

}  // namespace detail

/// Tensor product: disjoint union, interfaces concatenated left then right.
inline Diagram compose_parallel(const Diagram& left, const Diagram& right) {
  Diagram out = left;
  const auto map = detail::embed(out, right);
  for (VertexId v : right.inputs()) out.add_input(map.at(v));
  for (VertexId v : right.outputs()) out.add_output(map.at(v));
  return out;
}

/// Sequential composition: `first` then `second`. Output k of `first` is
/// joined to input k of `second` and both boundary vertices disappear.
inline Diagram compose_sequential(const Diagram& first, const Diagram& second) {
  if (first.outputs().size() != second.inputs().size())
    throw DiagramError("arity mismatch: " + std::to_string(first.outputs().size()) + " outputs vs " +
                       std::to_string(second.inputs().size()) + " inputs");
  Diagram out = first;
  const auto map = detail::embed(out, second);
  const std::vector<VertexId> joined_out = first.outputs();
  std::vector<VertexId> final_outputs;
  for (VertexId v : second.outputs()) final_outputs.push_back(map.at(v));
  for (std::size_t k = 0; k < joined_out.size(); ++k) {
    const VertexId o = joined_out[k];
    const VertexId i = map.at(second.inputs()[k]);
    const VertexId a = out.neighbors(o).front();
    const VertexId b = out.neighbors(i).front();
    out.remove_vertex(o);
    out.remove_vertex(i);
    if (a == i) {
      // o and i were wired to each other through earlier joins: a closed loop
      const VertexId loop = out.add_vertex(VertexKind::z());
      out.add_edge(loop, loop);
    } else {
      out.add_edge(a, b);
    }
  }
  out.set_outputs(final_outputs);
  return out;
}

enum class Side { Input, Output };

/// Single-qubit basis points/effects: z+ = |0>, z- = |1>, x+ = |+>, x- = |->.
enum class BasisPoint { ZPlus, ZMinus, XPlus, XMinus };

inline const char* point_name(BasisPoint p) {
  switch (p) {
    case BasisPoint::ZPlus: return "z+";
    case BasisPoint::ZMinus: return "z-";
    case BasisPoint::XPlus: return "x+";
    case BasisPoint::XMinus: return "x-";
  }
  return "?";
}

/// z-basis points are X spiders, x-basis points are Z spiders.
inline VertexKind point_kind(BasisPoint p) {
  switch (p) {
    case BasisPoint::ZPlus: return VertexKind::x(Phase::zero());
    case BasisPoint::ZMinus: return VertexKind::x(Phase::pi());
    case BasisPoint::XPlus: return VertexKind::z(Phase::zero());
    case BasisPoint::XMinus: return VertexKind::z(Phase::pi());
  }
  return {};
}

/// Replaces the boundary at `position` of the chosen side by the arity-1
/// spider for `point`; the interface shrinks by one.
inline Diagram plug(const Diagram& d, Side side, std::size_t position, BasisPoint point) {
  const auto& ids = side == Side::Input ? d.inputs() : d.outputs();
  if (position >= ids.size())
    throw DiagramError("plug position " + std::to_string(position) + " out of range (" +
                       std::to_string(ids.size()) + " wires)");
  Diagram out = d;
  const VertexId v = ids[position];
  std::vector<VertexId> rest = ids;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(position));
  if (side == Side::Input)
    out.set_inputs(rest);
  else
    out.set_outputs(rest);
  out.set_kind(v, point_kind(point));
  return out;
}

/// Same diagram with vertex v renamed to perm.at(v) and edges inserted in
/// `edge_order` (a permutation of the edge list positions; empty keeps order).
inline Diagram relabel(const Diagram& d, const std::map<VertexId, VertexId>& perm,
                       const std::vector<std::size_t>& edge_order = {}) {
  std::map<VertexId, VertexKind> vs;
  for (const auto& [v, k] : d.vertices()) vs[perm.at(v)] = k;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [id, e] : d.edges()) es.emplace_back(perm.at(e.a), perm.at(e.b));
  if (!edge_order.empty()) {
    std::vector<std::pair<VertexId, VertexId>> shuffled;
    for (std::size_t i : edge_order) shuffled.push_back(es.at(i));
    es = std::move(shuffled);
  }
  std::vector<VertexId> ins, outs;
  for (VertexId v : d.inputs()) ins.push_back(perm.at(v));
  for (VertexId v : d.outputs()) outs.push_back(perm.at(v));
  return Diagram::from_parts(vs, es, ins, outs);
}

/// Connected components as ascending vertex-id sets, ordered by smallest id.
inline std::vector<std::set<VertexId>> connected_components(const Diagram& d) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [v, k] : d.vertices()) adj[v];
  for (const auto& [id, e] : d.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::set<VertexId> done;
  std::vector<std::set<VertexId>> out;
  for (const auto& [v, k] : d.vertices()) {
    if (done.contains(v)) continue;
    std::set<VertexId> comp;
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      if (!comp.insert(u).second) continue;
      for (VertexId w : adj[u])
        if (!comp.contains(w)) stack.push_back(w);
    }
    done.insert(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// The sub-diagram induced by `keep`, with the same ids and the interface
/// restricted to kept boundaries (order preserved).
inline Diagram induced(const Diagram& d, const std::set<VertexId>& keep) {
  std::map<VertexId, VertexKind> vs;
  for (VertexId v : keep) vs[v] = d.kind(v);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [id, e] : d.edges())
    if (keep.contains(e.a) && keep.contains(e.b)) es.emplace_back(e.a, e.b);
  std::vector<VertexId> ins, outs;
  for (VertexId v : d.inputs())
    if (keep.contains(v)) ins.push_back(v);
  for (VertexId v : d.outputs())
    if (keep.contains(v)) outs.push_back(v);
  return Diagram::from_parts(vs, es, ins, outs);
}

}  // namespace zxv
