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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxv/diagram.hpp"
#include "zxv/matrix.hpp"

namespace zxv {

/// Raised when a tensor (interface or intermediate) would exceed the qubit cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ContractionOrder {
  Greedy,      // repeatedly contract the connected pair with the smallest result
  Sequential,  // fold tensors in ascending vertex id
};

struct EvalOptions {
  int max_qubits = 14;
  ContractionOrder order = ContractionOrder::Greedy;
};

namespace detail {

// Label of leg position p is bit (rank-1-p) of the flat index.
struct Tensor {
  std::vector<int> labels;
  std::vector<Complex> data;

  std::size_t rank() const { return labels.size(); }
};

inline void check_rank(std::size_t rank, int cap) {
  if (static_cast<int>(rank) > cap)
    throw ResourceError("tensor of " + std::to_string(rank) + " wires exceeds the qubit cap of " +
                        std::to_string(cap));
}

// Bit offsets for the positions `pos` of a rank-r tensor, enumerated
// big-endian over `pos`.
inline std::vector<std::size_t> offsets(std::size_t rank, const std::vector<std::size_t>& pos) {
  const std::size_t k = pos.size();
  std::vector<std::size_t> out(std::size_t{1} << k, 0);
  for (std::size_t x = 0; x < out.size(); ++x) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (x >> (k - 1 - i) & 1) off |= std::size_t{1} << (rank - 1 - pos[i]);
    out[x] = off;
  }
  return out;
}

inline Tensor contract(const Tensor& a, const Tensor& b, int cap) {
  std::vector<int> shared;
  std::vector<std::size_t> a_free, a_shared, b_free, b_shared;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it == b.labels.end()) {
      a_free.push_back(i);
    } else {
      shared.push_back(a.labels[i]);
      a_shared.push_back(i);
      b_shared.push_back(static_cast<std::size_t>(it - b.labels.begin()));
    }
  }
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (std::find(shared.begin(), shared.end(), b.labels[j]) == shared.end()) b_free.push_back(j);

  Tensor out;
  for (auto i : a_free) out.labels.push_back(a.labels[i]);
  for (auto j : b_free) out.labels.push_back(b.labels[j]);
  check_rank(out.rank(), cap);

  const auto af = offsets(a.rank(), a_free), as = offsets(a.rank(), a_shared);
  const auto bf = offsets(b.rank(), b_free), bs = offsets(b.rank(), b_shared);
  out.data.assign(af.size() * bf.size(), Complex{});
  for (std::size_t x = 0; x < af.size(); ++x)
    for (std::size_t s = 0; s < as.size(); ++s) {
      const Complex av = a.data[af[x] | as[s]];
      if (av == Complex{}) continue;
      for (std::size_t y = 0; y < bf.size(); ++y) out.data[x * bf.size() + y] += av * b.data[bf[y] | bs[s]];
    }
  return out;
}

// Sums over the diagonal of every label that occurs twice (self-loops).
inline Tensor trace_repeated(const Tensor& t) {
  std::vector<std::size_t> keep, first, second;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    auto it = std::find(t.labels.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.labels.end(), t.labels[i]);
    const bool is_second = std::find(t.labels.begin(), t.labels.begin() + static_cast<std::ptrdiff_t>(i),
                                     t.labels[i]) != t.labels.begin() + static_cast<std::ptrdiff_t>(i);
    if (is_second) continue;
    if (it != t.labels.end()) {
      first.push_back(i);
      second.push_back(static_cast<std::size_t>(it - t.labels.begin()));
    } else {
      keep.push_back(i);
    }
  }
  if (first.empty()) return t;
  Tensor out;
  for (auto i : keep) out.labels.push_back(t.labels[i]);
  const auto kf = offsets(t.rank(), keep);
  const auto f1 = offsets(t.rank(), first), f2 = offsets(t.rank(), second);
  out.data.assign(kf.size(), Complex{});
  for (std::size_t x = 0; x < kf.size(); ++x)
    for (std::size_t s = 0; s < f1.size(); ++s) out.data[x] += t.data[kf[x] | f1[s] | f2[s]];
  return out;
}

inline const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Z(alpha) spider: 1 on all-zeros, e^{i alpha} on all-ones, 0 elsewhere.
inline std::vector<Complex> z_spider(std::size_t legs, double alpha) {
  const Complex phase = std::polar(1.0, alpha);
  std::vector<Complex> t(std::size_t{1} << legs, Complex{});
  if (legs == 0) {
    t[0] = 1.0 + phase;
    return t;
  }
  t.front() = 1.0;
  t.back() = phase;
  return t;
}

// Applies the Hadamard to leg `leg` of a rank-`legs` tensor.
inline void hadamard_leg(std::vector<Complex>& t, std::size_t legs, std::size_t leg) {
  const std::size_t bit = std::size_t{1} << (legs - 1 - leg);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i & bit) continue;
    const Complex lo = t[i], hi = t[i | bit];
    t[i] = kInvSqrt2 * (lo + hi);
    t[i | bit] = kInvSqrt2 * (lo - hi);
  }
}

// X(alpha) spider as the Z spider with a Hadamard on every leg.
inline std::vector<Complex> x_spider(std::size_t legs, double alpha) {
  auto t = z_spider(legs, alpha);
  for (std::size_t l = 0; l < legs; ++l) hadamard_leg(t, legs, l);
  return t;
}

}  // namespace detail

/// Exact tensor-network contraction of the diagram to its matrix.
inline Matrix evaluate(const Diagram& d, const EvalOptions& opt = {}) {
  using detail::Tensor;
  d.validate();
  const std::size_t n_out = d.outputs().size(), n_in = d.inputs().size();
  detail::check_rank(n_out + n_in, opt.max_qubits);

  std::map<VertexId, int> open_label;
  for (std::size_t k = 0; k < n_out; ++k) open_label[d.outputs()[k]] = -1 - static_cast<int>(k);
  for (std::size_t k = 0; k < n_in; ++k) open_label[d.inputs()[k]] = -1 - static_cast<int>(n_out + k);

  std::vector<Tensor> tensors;
  for (const auto& [v, kind] : d.vertices()) {
    Tensor t;
    for (EdgeId e : d.incident_edges(v)) {
      t.labels.push_back(e);
      if (d.edge(e).is_self_loop()) t.labels.push_back(e);
    }
    const std::size_t legs = t.labels.size();
    detail::check_rank(legs, opt.max_qubits);
    switch (kind.type) {
      case VertexType::Z: t.data = detail::z_spider(legs, kind.phase.radians()); break;
      case VertexType::X: t.data = detail::x_spider(legs, kind.phase.radians()); break;
      case VertexType::H:
        t.data = {detail::kInvSqrt2, detail::kInvSqrt2, detail::kInvSqrt2, -detail::kInvSqrt2};
        break;
      case VertexType::Boundary:
        t.labels.insert(t.labels.begin(), open_label.at(v));
        t.data = {1.0, 0.0, 0.0, 1.0};
        break;
      case VertexType::Diamond: t.data = {std::numbers::sqrt2}; break;
    }
    tensors.push_back(detail::trace_repeated(t));
  }

  Tensor acc{{}, {1.0}};
  if (opt.order == ContractionOrder::Sequential) {
    for (const auto& t : tensors) acc = detail::contract(acc, t, opt.max_qubits);
  } else {
    auto shares = [](const Tensor& a, const Tensor& b) {
      for (int l : a.labels)
        if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) return true;
      return false;
    };
    auto result_rank = [](const Tensor& a, const Tensor& b) {
      std::size_t common = 0;
      for (int l : a.labels)
        if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) ++common;
      return a.rank() + b.rank() - 2 * common;
    };
    while (true) {
      std::size_t best_i = 0, best_j = 0, best = std::numeric_limits<std::size_t>::max();
      for (std::size_t i = 0; i < tensors.size(); ++i)
        for (std::size_t j = i + 1; j < tensors.size(); ++j) {
          if (!shares(tensors[i], tensors[j])) continue;
          const std::size_t r = result_rank(tensors[i], tensors[j]);
          if (r < best) {
            best = r;
            best_i = i;
            best_j = j;
          }
        }
      if (best == std::numeric_limits<std::size_t>::max()) break;
      tensors[best_i] = detail::contract(tensors[best_i], tensors[best_j], opt.max_qubits);
      tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best_j));
    }
    for (const auto& t : tensors) acc = detail::contract(acc, t, opt.max_qubits);
  }

  // permute open legs into (outputs..., inputs...) order
  Matrix m(std::size_t{1} << n_out, std::size_t{1} << n_in);
  const std::size_t total = n_out + n_in;
  std::vector<std::size_t> pos(total);
  for (std::size_t k = 0; k < total; ++k) {
    const int label = -1 - static_cast<int>(k);
    pos[k] = static_cast<std::size_t>(std::find(acc.labels.begin(), acc.labels.end(), label) - acc.labels.begin());
  }
  const auto off = detail::offsets(acc.rank(), pos);
  for (std::size_t idx = 0; idx < off.size(); ++idx) m[idx] = acc.data[off[idx]];
  return m;
}

/// Result of an up-to-scalar comparison. When `equal` and `scalar` is set,
/// a is approximately scalar * b.
struct EqualityVerdict {
  bool equal = false;
  std::optional<Complex> scalar;
  double max_residual = 0;
};

/// a = lambda * b for some nonzero lambda, with lambda read off the
/// largest-magnitude entry of b. Two (numerically) zero matrices are equal
/// with no scalar; a zero and a nonzero matrix are never equal.
inline EqualityVerdict equal_up_to_scalar(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("equal_up_to_scalar: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  const double na = a.norm_inf(), nb = b.norm_inf();
  const bool za = na <= tol, zb = nb <= tol;
  if (za && zb) return {true, std::nullopt, std::max(na, nb)};
  if (za != zb) return {false, std::nullopt, std::max(na, nb)};
  std::size_t k = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (std::abs(b[i]) > std::abs(b[k])) k = i;
  const Complex lambda = a[k] / b[k];
  const double residual = (a - lambda * b).norm_inf();
  return {residual <= tol * std::max(1.0, na), lambda, residual};
}

/// Unit-normalised single-qubit effect vector.
inline std::array<Complex, 2> effect_vector(BasisPoint p) {
  switch (p) {
    case BasisPoint::ZPlus: return {1.0, 0.0};
    case BasisPoint::ZMinus: return {0.0, 1.0};
    case BasisPoint::XPlus: return {detail::kInvSqrt2, detail::kInvSqrt2};
    case BasisPoint::XMinus: return {detail::kInvSqrt2, -detail::kInvSqrt2};
  }
  return {};
}

/// |<effects|state>|^2 / <state|state> for a state diagram (no inputs).
inline double born_probability(const Matrix& state, std::span<const BasisPoint> effects) {
  if (state.cols() != 1) throw std::invalid_argument("born_probability: expected a state (no inputs)");
  const std::size_t n = effects.size();
  if (state.rows() != (std::size_t{1} << n))
    throw std::invalid_argument("born_probability: " + std::to_string(n) + " effects for a state of dimension " +
                                std::to_string(state.rows()));
  const double norm2 = state.norm2();
  if (norm2 <= 1e-300) throw std::domain_error("born_probability: zero-norm state");
  Complex amp = 0;
  for (std::size_t idx = 0; idx < state.rows(); ++idx) {
    Complex w = 1.0;
    for (std::size_t k = 0; k < n; ++k) w *= effect_vector(effects[k])[idx >> (n - 1 - k) & 1];
    amp += w * state[idx];
  }
  return std::norm(amp) / (norm2 * norm2);
}

inline double born_probability(const Diagram& state, std::span<const BasisPoint> effects,
                               const EvalOptions& opt = {}) {
  if (!state.inputs().empty()) throw std::invalid_argument("born_probability: state diagram has inputs");
  if (state.outputs().size() != effects.size())
    throw std::invalid_argument("born_probability: " + std::to_string(effects.size()) + " effects for " +
                                std::to_string(state.outputs().size()) + " outputs");
  return born_probability(evaluate(state, opt), effects);
}

}  // namespace zxv
