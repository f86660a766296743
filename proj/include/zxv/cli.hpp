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

// Command-line front end. Exit codes: 0 success, 1 verification failure
// (or no match / not equal), 2 usage, parse or resource error.

#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zxv/derivations.hpp"
#include "zxv/qkd.hpp"
#include "zxv/sdc.hpp"
#include "zxv/simplify.hpp"
#include "zxv/soundness.hpp"
#include "zxv/zxg.hpp"

namespace zxv::cli {

struct Config {
  double tol = 1e-9;
  int max_qubits = 14;
  std::uint64_t seed = 0;
  int steps = 1000;
  bool strict = false;
  std::string trace_path;

  ScalarMode mode() const { return strict ? ScalarMode::Strict : ScalarMode::UpToScalar; }
  EvalOptions eval() const { return {max_qubits, ContractionOrder::Greedy}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Diagram load(const std::string& path) {
  try {
    return parse_zxg(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline std::string complex_text(Complex c) {
  const auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.6g,%.6g)", clean(c.real()), clean(c.imag()));
  return buf;
}

inline int cmd_eval(const Config& cfg, const std::string& file, std::ostream& out) {
  const Matrix m = evaluate(load(file), cfg.eval());
  out << m.rows() << "x" << m.cols() << "\n" << m.to_string();
  return 0;
}

inline int cmd_equal(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const Matrix ma = evaluate(load(a), cfg.eval()), mb = evaluate(load(b), cfg.eval());
  if (ma.rows() != mb.rows() || ma.cols() != mb.cols()) {
    out << "not equal: dimensions " << ma.rows() << "x" << ma.cols() << " vs " << mb.rows() << "x" << mb.cols()
        << "\n";
    return 1;
  }
  const EqualityVerdict v = equal_up_to_scalar(ma, mb, cfg.tol);
  if (!v.equal) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v.max_residual);
    out << "not equal up to scalar (residual " << buf << ")\n";
    return 1;
  }
  if (v.scalar) out << "equal up to scalar λ=" << complex_text(*v.scalar) << "\n";
  else out << "equal (both zero)\n";
  return 0;
}

inline int cmd_rewrite(const Config& cfg, const std::string& rule_text, bool backward, const std::string& file,
                       std::ostream& out) {
  const auto rule = parse_rule_name(rule_text);
  if (!rule) throw UsageError("unknown rule '" + rule_text + "'");
  const Direction dir = backward ? Direction::Backward : Direction::Forward;
  if (backward && !has_backward(*rule)) throw UsageError(std::string("rule ") + rule_text + " has no backward form");
  const Diagram d = load(file);
  const auto ms = find_matches(*rule, d, dir, cfg.mode());
  if (ms.empty()) {
    out << "no " << rule_text << " match\n";
    return 1;
  }
  Trace t(d);
  t.record(ms.front(), apply(d, ms.front(), cfg.mode()));
  if (!cfg.trace_path.empty()) write_file(cfg.trace_path, t.to_text());
  out << rule_text << " at " << ms.front().summary() << "\n" << serialize_zxg(t.current());
  return 0;
}

inline int cmd_simplify(const Config& cfg, const std::string& file, bool full, std::ostream& out) {
  SimplifyOptions opt;
  opt.strategy = full ? Strategy::Full : Strategy::Safe;
  opt.step_limit = cfg.steps;
  opt.mode = cfg.mode();
  const SimplifyResult r = simplify(load(file), opt);
  if (!cfg.trace_path.empty()) write_file(cfg.trace_path, r.trace.to_text());
  out << "steps: " << r.trace.size() << (r.step_limit_reached ? " (step limit reached)" : "") << "\n";
  out << serialize_zxg(r.diagram);
  return 0;
}

inline int cmd_soundness(const Config& cfg, const std::vector<std::string>& names, int samples, std::ostream& out) {
  std::vector<RuleName> rules;
  for (const std::string& n : names) {
    if (n == "all") {
      rules.assign(kAllRules.begin(), kAllRules.end());
      continue;
    }
    const auto r = parse_rule_name(n);
    if (!r) throw UsageError("unknown rule '" + n + "'");
    rules.push_back(*r);
  }
  if (rules.empty()) rules.assign(kAllRules.begin(), kAllRules.end());
  bool ok = true;
  for (RuleName r : rules) {
    const SoundnessReport rep = check_soundness(r, samples, cfg.seed, cfg.mode(), cfg.tol);
    out << rule_name(r) << ": " << rep.samples << " samples, " << rep.matches_checked << " matches, "
        << rep.failures.size() << " failures\n";
    for (const SoundnessFailure& f : rep.failures)
      out << "  failure at " << f.match << "\n--- before\n" << f.before << "--- after\n" << f.after;
    ok = ok && rep.passed();
  }
  return ok ? 0 : 1;
}

inline int cmd_derivations(const Config& cfg, const std::vector<std::string>& names, std::ostream& out) {
  std::vector<Derivation> which;
  for (const std::string& n : names) {
    if (n == "all") {
      which.assign(kAllDerivations.begin(), kAllDerivations.end());
      continue;
    }
    const auto d = parse_derivation(n);
    if (!d) throw UsageError("unknown derivation '" + n + "'");
    which.push_back(*d);
  }
  if (which.empty()) which.assign(kAllDerivations.begin(), kAllDerivations.end());
  bool ok = true;
  std::string traces;
  for (Derivation d : which) {
    try {
      const Trace t = replay_derivation(d);
      const EqualityVerdict v = equal_up_to_scalar(evaluate(t.current(), cfg.eval()), derivation_expected(d), cfg.tol);
      out << derivation_name(d) << ": " << t.size() << " steps, result " << (v.equal ? "matches" : "DIFFERS");
      if (v.scalar) out << " (λ=" << complex_text(*v.scalar) << ")";
      out << "\n";
      ok = ok && v.equal;
      traces += "== " + std::string(derivation_name(d)) + "\n" + t.to_text();
    } catch (const std::runtime_error& e) {
      out << derivation_name(d) << ": FAILED: " << e.what() << "\n";
      ok = false;
    }
  }
  if (cfg.trace_path.empty()) out << traces;
  else write_file(cfg.trace_path, traces);
  return ok ? 0 : 1;
}

inline int cmd_verify_sdc(std::optional<int> n, std::ostream& out) {
  ProtocolReport rep;
  if (n) {
    if (*n < 3 || *n > 6) throw UsageError("--n must be in 3..6");
    rep = sdc_n_ghz_verify(static_cast<std::size_t>(*n));
  } else {
    rep = sdc_verify_all();
  }
  out << rep.to_text();
  return rep.passed() ? 0 : 1;
}

inline int cmd_verify_qkd(const Config& cfg, std::int64_t rounds, std::ostream& out) {
  if (rounds < 1) throw UsageError("--rounds must be at least 1");
  const ProtocolReport lemmas = qkd_check_lemmas();
  const ProtocolReport sim = qkd_simulate(rounds, cfg.seed);
  out << lemmas.to_text() << sim.to_text();
  if (!cfg.trace_path.empty()) {
    std::string traces;
    for (const auto& [name, t] : lemmas.traces) traces += "== " + name + "\n" + t.to_text();
    write_file(cfg.trace_path, traces);
  }
  return lemmas.passed() && sim.passed() ? 0 : 1;
}

inline int cmd_render(const std::string& file, const std::string& output, std::ostream& out) {
  const std::string dot = to_dot(load(file));
  if (output.empty()) out << dot;
  else write_file(output, dot);
  return 0;
}

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ZX-calculus diagram evaluator, rewriter and protocol checker", "zxv"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--tol", cfg.tol, "comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-qubits", cfg.max_qubits, "largest intermediate tensor rank")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--steps", cfg.steps, "simplification step limit")->check(CLI::PositiveNumber);
  app.add_flag("--strict-scalars", cfg.strict, "keep sqrt(2) scalar bookkeeping");
  app.add_option("--trace", cfg.trace_path, "write rewrite traces to this file");

  std::string file, file2, rule, output;
  std::vector<std::string> names;
  bool backward = false, full = false;
  int samples = 200;
  std::optional<int> ghz_n;
  std::int64_t rounds = 10000;

  auto* eval = app.add_subcommand("eval", "print the matrix of a diagram");
  eval->add_option("file", file)->required();
  auto* equal = app.add_subcommand("equal", "compare two diagrams up to a scalar");
  equal->add_option("a", file)->required();
  equal->add_option("b", file2)->required();
  auto* rewrite = app.add_subcommand("rewrite", "apply a rule at its first match");
  rewrite->add_option("rule", rule)->required();
  rewrite->add_option("file", file)->required();
  rewrite->add_flag("--backward", backward, "use the rule right to left");
  auto* simp = app.add_subcommand("simplify", "bounded simplification");
  simp->add_option("file", file)->required();
  simp->add_flag("--full", full, "also try non-shrinking rules");
  auto* sound = app.add_subcommand("soundness", "randomised rule soundness check");
  sound->add_option("rules", names, "rule names or 'all'");
  sound->add_option("--samples", samples, "instances per rule")->check(CLI::PositiveNumber);
  auto* deriv = app.add_subcommand("derivations", "replay scripted rewrite chains");
  deriv->add_option("names", names, "derivation names or 'all'");
  auto* verify = app.add_subcommand("verify", "protocol verification");
  verify->require_subcommand(1);
  auto* sdc = verify->add_subcommand("sdc-ghz", "superdense coding with GHZ states");
  sdc->add_option("--n", ghz_n, "number of qubits (3..6)");
  auto* qkd = verify->add_subcommand("qkd-w3", "key distribution with the W state");
  qkd->add_option("--rounds", rounds, "Monte-Carlo rounds");
  auto* render = app.add_subcommand("render", "write Graphviz DOT");
  render->add_option("file", file)->required();
  render->add_option("-o,--output", output, "output file");
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();
  sdc->fallthrough();
  qkd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(cfg, file, out);
    if (*equal) return cmd_equal(cfg, file, file2, out);
    if (*rewrite) return cmd_rewrite(cfg, rule, backward, file, out);
    if (*simp) return cmd_simplify(cfg, file, full, out);
    if (*sound) return cmd_soundness(cfg, names, samples, out);
    if (*deriv) return cmd_derivations(cfg, names, out);
    if (*sdc) return cmd_verify_sdc(ghz_n, out);
    if (*qkd) return cmd_verify_qkd(cfg, rounds, out);
    if (*render) return cmd_render(file, output, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace zxv::cli
