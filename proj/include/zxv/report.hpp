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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zxv/matrix.hpp"
#include "zxv/trace.hpp"

namespace zxv {

struct CaseResult {
  std::string id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// An estimated probability checked against a reference value within
/// `sigmas` standard errors.
struct Estimate {
  std::string name;
  std::int64_t hits = 0;
  std::int64_t trials = 0;
  double expected = 0;
  double sigmas = 3;

  double value() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
  double std_error() const {
    return trials ? std::sqrt(expected * (1 - expected) / static_cast<double>(trials)) : 0.0;
  }
  bool pass() const { return trials > 0 && std::abs(value() - expected) <= sigmas * std_error(); }
};

struct ProtocolReport {
  std::string protocol;
  std::vector<CaseResult> cases;
  std::vector<std::pair<std::string, Complex>> scalars;
  std::vector<std::pair<std::string, Trace>> traces;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<Estimate> estimates;
  std::optional<std::uint64_t> seed;

  void add_case(std::string id, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    cases.push_back({std::move(id), std::move(expected), std::move(actual), ok});
  }
  void add_check(std::string id, std::string expected, std::string actual, bool ok) {
    cases.push_back({std::move(id), std::move(expected), std::move(actual), ok});
  }

  std::size_t passed_cases() const {
    std::size_t n = 0;
    for (const CaseResult& c : cases) n += c.pass;
    return n;
  }
  bool passed() const {
    for (const Estimate& e : estimates)
      if (!e.pass()) return false;
    return passed_cases() == cases.size();
  }

  /// One line per case ("case id | expected | actual | pass"), then the
  /// scalars, counts, estimates and a closing verdict. Traces are omitted.
  std::string to_text() const {
    std::string out = "protocol: " + protocol + "\n";
    if (seed) out += "seed: " + std::to_string(*seed) + "\n";
    for (const CaseResult& c : cases)
      out += "case " + c.id + " | " + c.expected + " | " + c.actual + " | " + (c.pass ? "pass" : "FAIL") + "\n";
    char buf[160];
    const auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
    for (const auto& [name, s] : scalars) {
      std::snprintf(buf, sizeof buf, "scalar %s: (%.6g,%.6g)\n", name.c_str(), clean(s.real()), clean(s.imag()));
      out += buf;
    }
    for (const auto& [name, n] : counts) out += "count " + name + ": " + std::to_string(n) + "\n";
    for (const Estimate& e : estimates) {
      std::snprintf(buf, sizeof buf, "estimate %s: %.4f (expected %.4f, stderr %.4f, n=%lld) %s\n", e.name.c_str(),
                    e.value(), e.expected, e.std_error(), static_cast<long long>(e.trials), e.pass() ? "pass" : "FAIL");
      out += buf;
    }
    out += std::string("result: ") + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(passed_cases()) + "/" +
           std::to_string(cases.size()) + " cases)\n";
    return out;
  }
};

}  // namespace zxv
