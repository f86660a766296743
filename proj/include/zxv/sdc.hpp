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

// Superdense coding with GHZ-class states: encode with Paulis on the
// sender's qubits, decode with the GHZ-basis measurement circuit.

#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxv/report.hpp"
#include "zxv/semantics.hpp"
#include "zxv/states.hpp"

namespace zxv {

class GhzClassIndex {
 public:
  explicit GhzClassIndex(int value) : value_(value) {
    if (value < 0 || value > 7) throw std::out_of_range("GHZ class index must be in 0..7");
  }
  int value() const { return value_; }
  /// (b1, b2, b3), b1 most significant.
  std::array<int, 3> bits() const { return {(value_ >> 2) & 1, (value_ >> 1) & 1, value_ & 1}; }
  std::string binary() const {
    const auto b = bits();
    return std::to_string(b[0]) + std::to_string(b[1]) + std::to_string(b[2]);
  }

 private:
  int value_;
};

enum class UnitaryTable { Standard, Alternative };

inline const char* table_name(UnitaryTable t) { return t == UnitaryTable::Standard ? "standard" : "alternative"; }

/// Paulis applied to qubits 2 and 3 for class index k.
inline std::array<Pauli, 2> encoding_unitaries(GhzClassIndex k, UnitaryTable table) {
  using P = Pauli;
  static constexpr std::array<std::array<Pauli, 2>, 8> kStandard = {{{P::I, P::I},
                                                                     {P::I, P::X},
                                                                     {P::X, P::I},
                                                                     {P::X, P::X},
                                                                     {P::Z, P::I},
                                                                     {P::Z, P::X},
                                                                     {P::iY, P::I},
                                                                     {P::iY, P::X}}};
  static constexpr std::array<std::array<Pauli, 2>, 8> kAlternative = {{{P::Z, P::Z},
                                                                        {P::Z, P::iY},
                                                                        {P::iY, P::Z},
                                                                        {P::iY, P::iY},
                                                                        {P::I, P::Z},
                                                                        {P::I, P::iY},
                                                                        {P::X, P::Z},
                                                                        {P::X, P::iY}}};
  return (table == UnitaryTable::Standard ? kStandard : kAlternative)[static_cast<std::size_t>(k.value())];
}

/// `state` (no inputs, n outputs) followed by paulis[i] on wire i.
inline Diagram apply_paulis(const Diagram& state, const std::vector<Pauli>& paulis) {
  if (paulis.size() != state.outputs().size()) throw std::invalid_argument("apply_paulis: arity mismatch");
  Diagram layer;
  for (Pauli p : paulis) layer = compose_parallel(layer, pauli(p));
  return compose_sequential(state, layer);
}

inline Diagram ghz_class_state(GhzClassIndex k, UnitaryTable table = UnitaryTable::Standard) {
  const auto u = encoding_unitaries(k, table);
  return apply_paulis(ghz_state(3), {Pauli::I, u[0], u[1]});
}

/// CNOT from wire 1 onto each of wires 2..n, then H on wire 1.
inline Diagram ghz_measurement(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ghz_measurement: need at least 2 qubits");
  Diagram d = wires(n);
  for (std::size_t t = 1; t < n; ++t) d = compose_sequential(d, cnot(n, 0, t));
  return compose_sequential(d, on_wire(n, 0, hadamard()));
}

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Decoded {
  std::size_t index = 0;
  Complex amplitude;
};

/// Index of the single nonzero entry of a state vector.
inline Decoded decode_basis_state(const Matrix& v, double tol = 1e-9) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[k])) k = i;
  const double peak = std::abs(v[k]);
  if (peak <= tol) throw DecodeError("measured vector is zero");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != k && std::abs(v[i]) > tol * peak) throw DecodeError("measured vector is not a basis state");
  return {k, v[k]};
}

/// Measures `state` in the GHZ basis and returns the outcome index.
inline Decoded measure_ghz_basis(const Diagram& state) {
  return decode_basis_state(evaluate(compose_sequential(state, ghz_measurement(state.outputs().size()))));
}

inline std::array<int, 3> sdc_decode(GhzClassIndex k, UnitaryTable table = UnitaryTable::Standard) {
  return GhzClassIndex(static_cast<int>(measure_ghz_basis(ghz_class_state(k, table)).index)).bits();
}

inline ProtocolReport sdc_verify_all() {
  ProtocolReport rep;
  rep.protocol = "sdc-ghz";
  for (UnitaryTable table : {UnitaryTable::Standard, UnitaryTable::Alternative}) {
    for (int k = 0; k < 8; ++k) {
      const GhzClassIndex idx(k);
      const auto u = encoding_unitaries(idx, table);
      const std::string id = std::string(table_name(table)) + " k=" + std::to_string(k) + " (" + pauli_name(u[0]) +
                             "," + pauli_name(u[1]) + ")";
      try {
        const Decoded d = measure_ghz_basis(ghz_class_state(idx, table));
        rep.add_case(id, idx.binary(), GhzClassIndex(static_cast<int>(d.index)).binary());
        rep.scalars.emplace_back(id, d.amplitude);
      } catch (const DecodeError& e) {
        rep.add_check(id, idx.binary(), e.what(), false);
      }
    }
  }
  return rep;
}

namespace detail {

inline std::string bits_of(std::size_t v, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if ((v >> (n - 1 - i)) & 1) s[i] = '1';
  return s;
}

}  // namespace detail

/// All 4 * 2^(n-2) encodings on an n-qubit GHZ state: {I, X, iY, Z} on
/// qubit n and {I, X} on qubits 2..n-1. Every outcome must be a basis
/// state and no two encodings may collide.
inline ProtocolReport sdc_n_ghz_verify(std::size_t n) {
  if (n < 3 || n > 6) throw std::invalid_argument("sdc_n_ghz_verify: n must be in 3..6");
  ProtocolReport rep;
  rep.protocol = "sdc-ghz n=" + std::to_string(n);
  const std::array<Pauli, 4> last = {Pauli::I, Pauli::X, Pauli::iY, Pauli::Z};
  std::map<std::size_t, std::string> seen;
  const std::size_t middle = n - 2;
  for (std::size_t mask = 0; mask < (std::size_t{1} << middle); ++mask) {
    for (Pauli pl : last) {
      std::vector<Pauli> ps{Pauli::I};
      std::string id;
      for (std::size_t q = 0; q < middle; ++q) {
        const Pauli p = ((mask >> (middle - 1 - q)) & 1) ? Pauli::X : Pauli::I;
        ps.push_back(p);
        id += std::string(pauli_name(p)) + ".";
      }
      ps.push_back(pl);
      id += pauli_name(pl);
      try {
        const Decoded d = measure_ghz_basis(apply_paulis(ghz_state(n), ps));
        const std::string out = detail::bits_of(d.index, n);
        const auto [it, fresh] = seen.emplace(d.index, id);
        rep.add_check(id, "distinct basis state", out + (fresh ? "" : " (collides with " + it->second + ")"), fresh);
      } catch (const DecodeError& e) {
        rep.add_check(id, "distinct basis state", e.what(), false);
      }
    }
  }
  rep.counts.emplace_back("distinct outcomes", static_cast<std::int64_t>(seen.size()));
  rep.add_check("outcome count", std::to_string(std::size_t{1} << n), std::to_string(seen.size()),
                seen.size() == (std::size_t{1} << n));
  return rep;
}

/// Number of distinct states (up to scalar) over all 4^(n-1) Pauli
/// combinations on qubits 2..n of the n-qubit GHZ state.
inline std::size_t ghz_pauli_orbit_size(std::size_t n) {
  const std::array<Pauli, 4> all = {Pauli::I, Pauli::X, Pauli::iY, Pauli::Z};
  std::vector<Matrix> distinct;
  std::size_t combos = 1;
  for (std::size_t i = 1; i < n; ++i) combos *= 4;
  for (std::size_t c = 0; c < combos; ++c) {
    std::vector<Pauli> ps{Pauli::I};
    std::size_t rest = c;
    for (std::size_t i = 1; i < n; ++i) {
      ps.push_back(all[rest % 4]);
      rest /= 4;
    }
    const Matrix v = evaluate(apply_paulis(ghz_state(n), ps));
    bool fresh = true;
    for (const Matrix& m : distinct)
      if (equal_up_to_scalar(v, m).equal) {
        fresh = false;
        break;
      }
    if (fresh) distinct.push_back(v);
  }
  return distinct.size();
}

}  // namespace zxv
