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
#include "zxv/simplify.hpp"
#include "zxv/soundness.hpp"
#include "zxv/states.hpp"
#include "zxv/zxg.hpp"

using namespace zxv;

namespace {

// One wire through n alternating phase-0 spiders.
Diagram identity_chain(int n) {
  Diagram d = wires(1);
  for (int i = 0; i < n; ++i)
    d = compose_sequential(d, spider(i % 2 ? VertexKind::x() : VertexKind::z(), 1, 1));
  return d;
}

void check_trace(const SimplifyResult& res, const Diagram& input) {
  const Matrix want = oracle::brute_force(input);
  CHECK(res.trace.start() == serialize_zxg(input));
  std::size_t prev = input.size_measure();
  for (const TraceStep& s : res.trace.steps()) {
    const Diagram d = parse_zxg(s.snapshot);
    CHECK(oracle::scalar_residual(oracle::brute_force(d), want) < 1e-9);
    prev = d.size_measure();
  }
  CHECK(prev == res.diagram.size_measure());
}

}  // namespace

TEST_CASE("safe simplification shrinks and preserves meaning", "[simplify]") {
  for (RuleName r : kAllRules)
    for (std::uint64_t i = 0; i < 8; ++i) {
      const Diagram d = random_instance(r, 21, i);
      const SimplifyResult res = simplify(d);
      CHECK(res.diagram.size_measure() <= d.size_measure());
      CHECK_FALSE(res.step_limit_reached);
      check_trace(res, d);
      // fixpoint: a second run takes no step
      CHECK(simplify(res.diagram).trace.empty());
    }
}

TEST_CASE("each safe step strictly shrinks", "[simplify]") {
  const SimplifyResult res = simplify(hopf_lhs());
  std::size_t prev = hopf_lhs().size_measure();
  for (const TraceStep& s : res.trace.steps()) {
    const std::size_t now = parse_zxg(s.snapshot).size_measure();
    CHECK(now < prev);
    prev = now;
  }
}

TEST_CASE("identity chains and cnot pairs simplify to bare wires", "[simplify]") {
  const SimplifyResult ids = simplify(identity_chain(3));
  CHECK(ids.diagram.vertex_count() == 2);
  CHECK(ids.trace.size() == 3);
  const SimplifyResult cc = simplify(compose_sequential(cnot(), cnot()));
  CHECK(cc.diagram.vertex_count() == 4);
  CHECK(oracle::scalar_residual(oracle::brute_force(cc.diagram), Matrix::identity(4)) < 1e-12);
}

TEST_CASE("full strategy stays sound and never exceeds safe", "[simplify]") {
  SimplifyOptions full;
  full.strategy = Strategy::Full;
  for (RuleName r : kAllRules)
    for (std::uint64_t i = 0; i < 4; ++i) {
      const Diagram d = random_instance(r, 22, i);
      const SimplifyResult res = simplify(d, full);
      check_trace(res, d);
      CHECK(res.diagram.size_measure() <= simplify(d).diagram.size_measure());
    }
  const SimplifyResult w = simplify(plug(w_state(), Side::Output, 0, BasisPoint::ZMinus), full);
  CHECK(w.diagram.size_measure() < plug(w_state(), Side::Output, 0, BasisPoint::ZMinus).size_measure());
}

TEST_CASE("step limit yields a flagged partial result", "[simplify]") {
  SimplifyOptions opt;
  opt.step_limit = 1;
  const SimplifyResult res = simplify(identity_chain(3), opt);
  CHECK(res.step_limit_reached);
  CHECK(res.trace.size() == 1);
  check_trace(res, identity_chain(3));
}

TEST_CASE("simplification is deterministic", "[simplify]") {
  const Diagram d = random_instance(RuleName::B2, 4, 2);
  CHECK(simplify(d).trace.to_text() == simplify(d).trace.to_text());
  SimplifyOptions rev;
  rev.reverse_matches = true;
  const SimplifyResult r = simplify(d, rev);
  check_trace(r, d);
}

TEST_CASE("trace text lists numbered steps", "[simplify]") {
  const std::string text = simplify(identity_chain(2)).trace.to_text();
  CHECK(text.rfind("step 0: start\n", 0) == 0);
  CHECK(text.find("step 1: S2a at [") != std::string::npos);
  CHECK(text.find("step 2: S2a at [") != std::string::npos);
}
