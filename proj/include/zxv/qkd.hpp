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

// Pairwise key distribution with a shared W state: lemma checks on the
// diagrams and a seeded Monte-Carlo run of the protocol.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxv/derivations.hpp"
#include "zxv/report.hpp"

namespace zxv {

enum class Basis { Z, X };
enum class Outcome { Plus, Minus };

inline BasisPoint basis_point(Basis b, Outcome o) {
  if (b == Basis::Z) return o == Outcome::Plus ? BasisPoint::ZPlus : BasisPoint::ZMinus;
  return o == Outcome::Plus ? BasisPoint::XPlus : BasisPoint::XMinus;
}

struct QkdRound {
  std::array<Basis, 3> bases{};
  std::array<Outcome, 3> outcomes{};
  bool bases_accepted = false;  // exactly one z
  bool accepted = false;        // ... and the decider saw z+
  std::optional<int> decider;
  std::optional<int> shared_bit;
  bool sacrificed = false;  // spent on a public spot check
};

namespace detail {

inline std::string point_list(std::span<const BasisPoint> ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::string(point_name(ps[i]));
  return s;
}

// Born probabilities for every basis pattern (bit i set: party i uses x)
// and outcome pattern (bit i set: party i sees minus); party 0 is the MSB.
struct OutcomeTable {
  std::array<std::array<double, 8>, 8> p{};

  explicit OutcomeTable(const Matrix& state) {
    for (unsigned bases = 0; bases < 8; ++bases)
      for (unsigned out = 0; out < 8; ++out) {
        std::array<BasisPoint, 3> eff{};
        for (int i = 0; i < 3; ++i) {
          const unsigned bit = 2u - static_cast<unsigned>(i);
          eff[i] = basis_point((bases >> bit) & 1 ? Basis::X : Basis::Z, (out >> bit) & 1 ? Outcome::Minus : Outcome::Plus);
        }
        p[bases][out] = born_probability(state, eff);
      }
  }
};

inline double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline QkdRound simulate_round(const OutcomeTable& table, std::uint64_t seed, std::uint64_t round) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(round), static_cast<std::uint32_t>(round >> 32)};
  std::mt19937_64 rng(seq);
  QkdRound r;
  const unsigned bases = static_cast<unsigned>(rng() >> 61);
  for (int i = 0; i < 3; ++i) r.bases[i] = (bases >> (2 - i)) & 1 ? Basis::X : Basis::Z;
  const double u = unit_double(rng);
  unsigned out = 7;
  double acc = 0;
  for (unsigned o = 0; o < 8; ++o) {
    acc += table.p[bases][o];
    if (u < acc) {
      out = o;
      break;
    }
  }
  for (int i = 0; i < 3; ++i) r.outcomes[i] = (out >> (2 - i)) & 1 ? Outcome::Minus : Outcome::Plus;
  // No eavesdropper is modelled, so no round is spent on a public spot check.
  r.sacrificed = false;
  int zs = 0;
  for (int i = 0; i < 3; ++i)
    if (r.bases[i] == Basis::Z) {
      ++zs;
      r.decider = i;
    }
  if (zs != 1) {
    r.decider.reset();
    return r;
  }
  r.bases_accepted = true;
  if (r.outcomes[*r.decider] != Outcome::Plus) return r;
  r.accepted = true;
  const int a = (*r.decider + 1) % 3;
  r.shared_bit = r.outcomes[a] == Outcome::Plus ? 0 : 1;
  return r;
}

}  // namespace detail

/// The parties other than the decider, ascending.
inline std::array<int, 2> key_pair(int decider) {
  return decider == 0 ? std::array{1, 2} : decider == 1 ? std::array{0, 2} : std::array{0, 1};
}

inline std::vector<QkdRound> qkd_rounds(std::int64_t rounds, std::uint64_t seed) {
  if (rounds < 1) throw std::invalid_argument("qkd: rounds must be at least 1");
  const detail::OutcomeTable table(evaluate(w_state()));
  std::vector<QkdRound> out;
  out.reserve(static_cast<std::size_t>(rounds));
  for (std::int64_t i = 0; i < rounds; ++i) out.push_back(detail::simulate_round(table, seed, static_cast<std::uint64_t>(i)));
  return out;
}

inline ProtocolReport qkd_check_lemmas() {
  ProtocolReport rep;
  rep.protocol = "qkd-w3 lemmas";
  const Diagram w = w_state();
  const Matrix wv = evaluate(w);
  const double tol = 1e-9;

  // z- on any wire leaves |00> on the other two
  for (std::size_t wire = 0; wire < 3; ++wire) {
    const Matrix rest = evaluate(plug(w, Side::Output, wire, BasisPoint::ZMinus));
    const auto v = equal_up_to_scalar(rest, Matrix{{1}, {0}, {0}, {0}});
    rep.add_check("z- on wire " + std::to_string(wire + 1), "|00>", v.equal ? "|00>" : "other", v.equal);
  }

  // decider z+, x effects on the other two: equal outcomes only
  for (int decider = 0; decider < 3; ++decider) {
    const auto pair = key_pair(decider);
    for (Outcome o1 : {Outcome::Plus, Outcome::Minus})
      for (Outcome o2 : {Outcome::Plus, Outcome::Minus}) {
        std::array<BasisPoint, 3> eff{};
        eff[decider] = BasisPoint::ZPlus;
        eff[pair[0]] = basis_point(Basis::X, o1);
        eff[pair[1]] = basis_point(Basis::X, o2);
        const double p = born_probability(wv, eff);
        const bool same = o1 == o2;
        char buf[64];
        std::snprintf(buf, sizeof buf, "P=%.6f", p < tol ? 0.0 : p);
        rep.add_check("effects " + detail::point_list(eff), same ? "nonzero" : "zero", buf, same ? p > tol : p <= tol);
      }
  }

  // the rewrite chain ends with the partner holding the same x state
  for (BasisPoint effect : {BasisPoint::XPlus, BasisPoint::XMinus}) {
    const std::string id = std::string("rewrite chain, partner effect ") + point_name(effect);
    try {
      const Trace t = detail::replay_qkd_core(effect);
      const auto ev = effect_vector(effect);
      const auto v = equal_up_to_scalar(evaluate(t.current()), Matrix{{ev[0]}, {ev[1]}});
      rep.add_check(id, point_name(effect), v.equal ? point_name(effect) : "other", v.equal);
      if (v.scalar) rep.scalars.emplace_back(id, *v.scalar);
      rep.traces.emplace_back(id, t);
    } catch (const std::runtime_error& e) {
      rep.add_check(id, point_name(effect), e.what(), false);
    }
  }
  return rep;
}

inline ProtocolReport qkd_simulate(std::int64_t rounds, std::uint64_t seed) {
  const auto rs = qkd_rounds(rounds, seed);
  const detail::OutcomeTable table(evaluate(w_state()));
  ProtocolReport rep;
  rep.protocol = "qkd-w3 simulation";
  rep.seed = seed;

  // reference values from the Born table: each basis pattern is equally likely
  double p_plus = 0, p_zero = 0;
  for (unsigned bases : {3u, 5u, 6u}) {
    const unsigned zbit = (~bases) & 7u;
    for (unsigned o = 0; o < 8; ++o)
      if (!(o & zbit)) {
        p_plus += table.p[bases][o] / 3;
        if (!(o & bases)) p_zero += table.p[bases][o] / 3;
      }
  }

  std::int64_t bases_ok = 0, accepted = 0, unequal = 0, zero_bits = 0, sacrificed = 0;
  std::array<std::int64_t, 3> key_bits{};
  for (const QkdRound& r : rs) {
    sacrificed += r.sacrificed;
    if (!r.bases_accepted) continue;
    ++bases_ok;
    if (!r.accepted) continue;
    ++accepted;
    const auto pair = key_pair(*r.decider);
    if (r.outcomes[pair[0]] != r.outcomes[pair[1]]) ++unequal;
    zero_bits += *r.shared_bit == 0;
    ++key_bits[static_cast<std::size_t>(*r.decider)];
  }
  rep.counts.emplace_back("rounds", rounds);
  rep.counts.emplace_back("sacrificed for spot checks", sacrificed);
  rep.counts.emplace_back("basis pattern accepted", bases_ok);
  rep.counts.emplace_back("decider z+", accepted);
  rep.counts.emplace_back("key bits parties 2-3", key_bits[0]);
  rep.counts.emplace_back("key bits parties 1-3", key_bits[1]);
  rep.counts.emplace_back("key bits parties 1-2", key_bits[2]);
  rep.add_case("accepted rounds with unequal x outcomes", "0", std::to_string(unequal));
  rep.estimates.push_back({"basis acceptance rate", bases_ok, rounds, 3.0 / 8.0});
  rep.estimates.push_back({"P(decider z+ | accepted bases)", accepted, bases_ok, p_plus});
  rep.estimates.push_back({"P(shared bit 0 | decider z+)", zero_bits, accepted, p_zero / p_plus});
  return rep;
}

}  // namespace zxv
