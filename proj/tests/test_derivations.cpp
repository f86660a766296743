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

#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "zxv/derivations.hpp"
#include "zxv/zxg.hpp"

using namespace zxv;

namespace {

// Expected results written out by hand from the standard state vectors.
Matrix hand_expected(Derivation d) {
  using oracle::basis;
  switch (d) {
    case Derivation::Hopf: return oracle::outer(oracle::ket({1, 0}), oracle::plus());
    case Derivation::RuleA: return oracle::ket({1, std::polar(1.0, -std::numbers::pi / 3)});
    case Derivation::GhzPlug0: return basis(2, 0);
    case Derivation::GhzPlug1: return basis(2, 3);
    case Derivation::WPlug0: return basis(2, 1) + basis(2, 2);
    case Derivation::WPlug1: return basis(2, 0);
    case Derivation::QkdCore: return oracle::minus();
  }
  return {};
}

}  // namespace

TEST_CASE("derivation names round-trip", "[derivations]") {
  for (Derivation d : kAllDerivations) CHECK(parse_derivation(derivation_name(d)) == d);
  CHECK_FALSE(parse_derivation("bogus"));
}

TEST_CASE("every derivation step preserves the denotation", "[derivations]") {
  for (Derivation which : kAllDerivations) {
    INFO(derivation_name(which));
    const Trace t = replay_derivation(which);
    const Matrix start = oracle::brute_force(parse_zxg(t.start()));
    for (const TraceStep& s : t.steps())
      CHECK(oracle::scalar_residual(oracle::brute_force(parse_zxg(s.snapshot)), start) < 1e-9);
  }
}

TEST_CASE("derivations end at the hand-computed result", "[derivations]") {
  for (Derivation which : kAllDerivations) {
    INFO(derivation_name(which));
    const Trace t = replay_derivation(which);
    const Matrix want = hand_expected(which);
    CHECK(oracle::scalar_residual(oracle::brute_force(t.current()), want) < 1e-9);
    CHECK(oracle::scalar_residual(derivation_expected(which), want) < 1e-12);
    CHECK_FALSE(t.empty());
  }
}

TEST_CASE("plugged states reduce to few vertices", "[derivations]") {
  CHECK(replay_derivation(Derivation::GhzPlug0).current().vertex_count() <= 6);
  CHECK(replay_derivation(Derivation::GhzPlug1).current().vertex_count() <= 6);
  CHECK(replay_derivation(Derivation::Hopf).size() == 6);
}

TEST_CASE("rule A chain uses the phase-flip rule", "[derivations]") {
  const Trace t = replay_derivation(Derivation::RuleA);
  CHECK(t.uses(RuleName::K2));
  CHECK(t.uses(RuleName::K1));
  for (int k = 1; k < 6; ++k) {
    const Trace tk = detail::replay_rule_a(Phase(k, 6));
    const Matrix want = oracle::ket({1, std::polar(1.0, -k * std::numbers::pi / 6)});
    CHECK(oracle::scalar_residual(oracle::brute_force(tk.current()), want) < 1e-9);
  }
}

TEST_CASE("QKD core holds for each single-qubit effect", "[derivations]") {
  const Trace minus = detail::replay_qkd_core(BasisPoint::XMinus);
  CHECK(oracle::scalar_residual(oracle::brute_force(minus.current()), oracle::minus()) < 1e-9);
}
