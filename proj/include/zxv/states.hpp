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

// Diagrams for the standard states and gates.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zxv/diagram.hpp"

namespace zxv {

/// n parallel identity wires.
inline Diagram wires(std::size_t n) {
  Diagram d;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId a = d.add_vertex(VertexKind::boundary()), b = d.add_vertex(VertexKind::boundary());
    d.add_edge(a, b);
    d.add_input(a);
    d.add_output(b);
  }
  return d;
}

/// A single spider with `ins` input and `outs` output wires.
inline Diagram spider(VertexKind k, std::size_t ins, std::size_t outs) {
  Diagram d;
  const VertexId v = d.add_vertex(k);
  for (std::size_t i = 0; i < ins; ++i) d.add_input_wire(v);
  for (std::size_t i = 0; i < outs; ++i) d.add_output_wire(v);
  return d;
}

/// Z(0) with n outputs: |0..0> + |1..1>.
inline Diagram ghz_state(std::size_t n = 3) { return spider(VertexKind::z(), 0, n); }

/// Three-qubit W state, built from a Z/X parity network with phase
/// gadgets. Output order (b, x, y); y = NOT(b XOR x) via the X(pi) spider,
/// and the gadgets weight |00>_{bx} against |01>, |10> and kill |11>.
inline Diagram w_state() {
  Diagram d;
  const VertexId b = d.add_vertex(VertexKind::z());
  const VertexId x = d.add_vertex(VertexKind::z());
  const VertexId parity = d.add_vertex(VertexKind::x(Phase::pi()));
  const VertexId k = d.add_vertex(VertexKind::z(Phase(5, 3)));
  const VertexId g1 = d.add_vertex(VertexKind::x());
  const VertexId g2 = d.add_vertex(VertexKind::x());
  const VertexId p1 = d.add_vertex(VertexKind::z(Phase(1, 3)));
  const VertexId p2 = d.add_vertex(VertexKind::z(Phase(1, 3)));
  d.add_edge(b, parity);
  d.add_edge(x, parity);
  d.add_edge(k, g1);
  d.add_edge(k, g2);
  d.add_edge(g1, b);
  d.add_edge(g1, p1);
  d.add_edge(g2, x);
  d.add_edge(g2, p2);
  d.add_output_wire(b);
  d.add_output_wire(x);
  d.add_output_wire(parity);
  return d;
}

enum class Pauli { I, X, Z, iY, minus_iY };

inline const char* pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Z: return "Z";
    case Pauli::iY: return "iY";
    case Pauli::minus_iY: return "minus_iY";
  }
  return "?";
}

inline std::optional<Pauli> parse_pauli(std::string_view s) {
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Z, Pauli::iY, Pauli::minus_iY})
    if (s == pauli_name(p)) return p;
  return std::nullopt;
}

/// X = X(pi), Z = Z(pi), iY = Z after X, minus_iY = X after Z.
inline Diagram pauli(Pauli p) {
  switch (p) {
    case Pauli::I: return wires(1);
    case Pauli::X: return spider(VertexKind::x(Phase::pi()), 1, 1);
    case Pauli::Z: return spider(VertexKind::z(Phase::pi()), 1, 1);
    case Pauli::iY: return compose_sequential(pauli(Pauli::X), pauli(Pauli::Z));
    case Pauli::minus_iY: return compose_sequential(pauli(Pauli::Z), pauli(Pauli::X));
  }
  return wires(1);
}

inline Diagram hadamard() {
  Diagram d;
  const VertexId h = d.add_vertex(VertexKind::h());
  d.add_input_wire(h);
  d.add_output_wire(h);
  return d;
}

/// CNOT with control on wire 0 and target on wire 1.
inline Diagram cnot() {
  Diagram d;
  const VertexId c = d.add_vertex(VertexKind::z());
  const VertexId t = d.add_vertex(VertexKind::x());
  d.add_input_wire(c);
  d.add_input_wire(t);
  d.add_output_wire(c);
  d.add_output_wire(t);
  d.add_edge(c, t);
  return d;
}

/// CNOT on n wires with the given control and target.
inline Diagram cnot(std::size_t n, std::size_t control, std::size_t target) {
  if (control >= n || target >= n || control == target) throw std::invalid_argument("cnot: bad wire indices");
  Diagram d;
  std::vector<VertexId> ins(n), outs(n);
  for (std::size_t w = 0; w < n; ++w) {
    ins[w] = d.add_vertex(VertexKind::boundary());
    outs[w] = d.add_vertex(VertexKind::boundary());
  }
  const VertexId c = d.add_vertex(VertexKind::z());
  const VertexId t = d.add_vertex(VertexKind::x());
  d.add_edge(c, t);
  for (std::size_t w = 0; w < n; ++w) {
    const VertexId via = w == control ? c : w == target ? t : -1;
    if (via < 0) {
      d.add_edge(ins[w], outs[w]);
    } else {
      d.add_edge(ins[w], via);
      d.add_edge(via, outs[w]);
    }
  }
  d.set_inputs(ins);
  d.set_outputs(outs);
  return d;
}

/// `gate` (one input, one output) on wire k of n, identity elsewhere.
inline Diagram on_wire(std::size_t n, std::size_t k, const Diagram& gate) {
  if (k >= n) throw std::invalid_argument("on_wire: wire index out of range");
  Diagram d = k > 0 ? wires(k) : Diagram{};
  d = compose_parallel(d, gate);
  if (k + 1 < n) d = compose_parallel(d, wires(n - k - 1));
  return d;
}

}  // namespace zxv
