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
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "zxv/diagram.hpp"

namespace zxv {

namespace detail {

struct DenseGraph {
  std::vector<VertexId> ids;
  std::map<VertexId, int> index;
  std::vector<VertexKind> kinds;
  std::vector<int> degree;
  std::vector<std::vector<int>> mult;  // mult[i][j] = #edges between i and j; self-loops on the diagonal

  explicit DenseGraph(const Diagram& d) {
    for (const auto& [v, k] : d.vertices()) {
      index[v] = static_cast<int>(ids.size());
      ids.push_back(v);
      kinds.push_back(k);
      degree.push_back(d.degree(v));
    }
    const auto n = ids.size();
    mult.assign(n, std::vector<int>(n, 0));
    for (const auto& [id, e] : d.edges()) {
      const int a = index.at(e.a), b = index.at(e.b);
      ++mult[a][b];
      if (a != b) ++mult[b][a];
    }
  }
};

}  // namespace detail

/// Finds a bijection of vertex ids preserving kinds, phases, edge
/// multiplicities and interface order. Returns the map a-id -> b-id.
inline std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Diagram& a, const Diagram& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.inputs().size() != b.inputs().size() || a.outputs().size() != b.outputs().size())
    return std::nullopt;

  const detail::DenseGraph ga(a), gb(b);
  const int n = static_cast<int>(ga.ids.size());
  std::vector<int> map(n, -1), rev(n, -1);

  auto compatible = [&](int i, int j) {
    if (!(ga.kinds[i] == gb.kinds[j]) || ga.degree[i] != gb.degree[j] || ga.mult[i][i] != gb.mult[j][j])
      return false;
    for (int u = 0; u < n; ++u) {
      if (map[u] < 0 || u == i) continue;
      if (ga.mult[i][u] != gb.mult[j][map[u]]) return false;
    }
    return true;
  };

  // interface anchors
  auto anchor = [&](const std::vector<VertexId>& xs, const std::vector<VertexId>& ys) {
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const int i = ga.index.at(xs[k]), j = gb.index.at(ys[k]);
      if (!compatible(i, j) || rev[j] >= 0) return false;
      map[i] = j;
      rev[j] = i;
    }
    return true;
  };
  if (!anchor(a.inputs(), b.inputs()) || !anchor(a.outputs(), b.outputs())) return std::nullopt;

  // order remaining vertices so each is adjacent to an earlier one when possible
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int i = 0; i < n; ++i)
    if (map[i] >= 0) placed[i] = 1;
  std::vector<int> frontier;
  for (int i = 0; i < n; ++i)
    if (placed[i]) frontier.push_back(i);
  const int anchored = static_cast<int>(std::count(placed.begin(), placed.end(), 1));
  while (static_cast<int>(order.size()) + anchored < n) {
    bool grew = false;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const int u = frontier[f];
      for (int w = 0; w < n; ++w) {
        if (!placed[w] && ga.mult[u][w] > 0) {
          placed[w] = 1;
          order.push_back(w);
          frontier.push_back(w);
          grew = true;
        }
      }
    }
    if (!grew) {
      for (int w = 0; w < n; ++w) {
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
          frontier.push_back(w);
          break;
        }
      }
    }
  }

  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const int i = order[pos];
    for (int j = 0; j < n; ++j) {
      if (rev[j] >= 0 || !compatible(i, j)) continue;
      map[i] = j;
      rev[j] = i;
      if (extend(pos + 1)) return true;
      map[i] = -1;
      rev[j] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  std::map<VertexId, VertexId> out;
  for (int i = 0; i < n; ++i) out[ga.ids[i]] = gb.ids[map[i]];
  return out;
}

inline bool isomorphic(const Diagram& a, const Diagram& b) { return find_isomorphism(a, b).has_value(); }

/// Isomorphism-invariant fingerprint (colour refinement over kinds, degrees
/// and edge multiplicities). Equal diagrams always hash equal.
inline std::uint64_t structural_hash(const Diagram& d) {
  const detail::DenseGraph g(d);
  const int n = static_cast<int>(g.ids.size());
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::vector<std::uint64_t> colour(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t h = static_cast<std::uint64_t>(g.kinds[i].type) + 1;
    if (g.kinds[i].is_spider()) {
      h = mix(h, static_cast<std::uint64_t>(g.kinds[i].phase.numerator()));
      h = mix(h, static_cast<std::uint64_t>(g.kinds[i].phase.denominator()));
    }
    h = mix(h, static_cast<std::uint64_t>(g.degree[i]));
    colour[i] = h;
  }
  for (std::size_t k = 0; k < d.inputs().size(); ++k) colour[g.index.at(d.inputs()[k])] = mix(colour[g.index.at(d.inputs()[k])], 1000 + k);
  for (std::size_t k = 0; k < d.outputs().size(); ++k) colour[g.index.at(d.outputs()[k])] = mix(colour[g.index.at(d.outputs()[k])], 5000 + k);
  for (int round = 0; round < 4; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> nb;
      for (int j = 0; j < n; ++j)
        for (int m = 0; m < g.mult[i][j]; ++m) nb.push_back(colour[j]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = colour[i];
      for (auto c : nb) h = mix(h, c);
      next[i] = h;
    }
    colour = std::move(next);
  }
  std::sort(colour.begin(), colour.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto c : colour) h = mix(h, c);
  return h;
}

}  // namespace zxv
