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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// and exits nonzero if any fails.

#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "zxv/cli.hpp"
#include "zxv/derivations.hpp"
#include "zxv/isomorphism.hpp"
#include "zxv/qkd.hpp"
#include "zxv/sdc.hpp"
#include "zxv/soundness.hpp"
#include "zxv/zxg.hpp"

using namespace zxv;
using oracle::kR;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double rel_diff(const Matrix& a, const Matrix& b) {
  return max_abs_diff(a, b) / std::max(1.0, b.norm_inf());
}

// ---------------------------------------------------------------- 1

Verdict generator_fidelity() {
  Verdict v;
  double worst = 0;
  int entries = 0;
  auto check = [&](const std::string& name, const Diagram& d, const Matrix& expected) {
    const Matrix got = evaluate(d);
    const bool same_shape = got.rows() == expected.rows() && got.cols() == expected.cols();
    const double diff = same_shape ? max_abs_diff(got, expected) : 1e9;
    worst = std::max(worst, diff);
    ++entries;
    v.require(diff <= 1e-12, name + " off by " + fmt("%.3g", diff));
  };
  const std::vector<double> alphas = {0, std::numbers::pi / 3, std::numbers::pi / 2, std::numbers::pi,
                                      5 * std::numbers::pi / 4};
  const std::vector<Phase> phases = {Phase(0), Phase(1, 3), Phase(1, 2), Phase(1), Phase(5, 4)};

  check("identity", wires(1), Matrix{{1, 0}, {0, 1}});
  check("hadamard", hadamard(), Matrix{{kR, kR}, {kR, -kR}});
  {
    Diagram sw;
    const VertexId i1 = sw.add_vertex(VertexKind::boundary()), i2 = sw.add_vertex(VertexKind::boundary());
    const VertexId o1 = sw.add_vertex(VertexKind::boundary()), o2 = sw.add_vertex(VertexKind::boundary());
    sw.add_edge(i1, o2);
    sw.add_edge(i2, o1);
    sw.set_inputs({i1, i2});
    sw.set_outputs({o1, o2});
    check("swap", sw, Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  }
  {
    Diagram cap;
    const VertexId a = cap.add_vertex(VertexKind::boundary()), b = cap.add_vertex(VertexKind::boundary());
    cap.add_edge(a, b);
    cap.set_outputs({a, b});
    check("cap", cap, oracle::ket({1, 0, 0, 1}));
    Diagram cup;
    const VertexId c = cup.add_vertex(VertexKind::boundary()), d = cup.add_vertex(VertexKind::boundary());
    cup.add_edge(c, d);
    cup.set_inputs({c, d});
    check("cup", cup, Matrix{{1, 0, 0, 1}});
  }
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const Complex e = std::polar(1.0, alphas[i]);
    const std::string a = phases[i].to_string();
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {2, 2}, {0, 3}, {3, 0}}) {
      const std::string shape = std::to_string(n) + "->" + std::to_string(m);
      // green: |0..0> -> |0..0>, |1..1> -> e^{ia}|1..1>
      const Matrix z = oracle::outer(oracle::kron_power(oracle::basis(1, 0), m), oracle::kron_power(oracle::basis(1, 0), n)) +
                       e * oracle::outer(oracle::kron_power(oracle::basis(1, 1), m), oracle::kron_power(oracle::basis(1, 1), n));
      check("Z(" + a + ") " + shape, spider(VertexKind::z(phases[i]), n, m), z);
      // red: |+..+> -> |+..+>, |-..-> -> e^{ia}|-..->
      const Matrix x = oracle::outer(oracle::kron_power(oracle::plus(), m), oracle::kron_power(oracle::plus(), n)) +
                       e * oracle::outer(oracle::kron_power(oracle::minus(), m), oracle::kron_power(oracle::minus(), n));
      check("X(" + a + ") " + shape, spider(VertexKind::x(phases[i]), n, m), x);
    }
    check("Z11(" + a + ")", spider(VertexKind::z(phases[i]), 1, 1), Matrix{{1, 0}, {0, e}});
    // the printed X11(a) is the red spider with phase -a
    const double h = alphas[i] / 2;
    const Complex s = std::polar(1.0, -h), is = Complex(0, std::sin(h));
    check("X11(" + a + ") printed", spider(VertexKind::x(-phases[i]), 1, 1),
          Matrix{{s * std::cos(h), s * is}, {s * is, s * std::cos(h)}});
    check("Z point(" + a + ")", spider(VertexKind::z(phases[i]), 0, 1), oracle::ket({1, e}));
    // the printed red point cos|0> + i sin|1> is the red -a point over sqrt(2) e^{-ia/2}
    const Diagram xp = spider(VertexKind::x(-phases[i]), 0, 1);
    const Matrix scaled = std::polar(kR, h) * evaluate(xp);
    const double diff = max_abs_diff(scaled, oracle::ket({std::cos(h), is}));
    worst = std::max(worst, diff);
    ++entries;
    v.require(diff <= 1e-12, "X point(" + a + ") off by " + fmt("%.3g", diff));
  }
  {
    Diagram dia;
    dia.add_vertex(VertexKind::diamond());
    check("diamond", dia, Matrix{{std::numbers::sqrt2}});
  }
  const Matrix cn = evaluate(cnot());
  const double cres = oracle::scalar_residual(cn, Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  v.require(cres <= 1e-12, "CNOT residual " + fmt("%.3g", cres));
  if (v.pass)
    v.detail = std::to_string(entries) + " generator checks, worst " + fmt("%.2g", worst) + "; CNOT residual " +
               fmt("%.2g", cres);
  return v;
}

// ---------------------------------------------------------------- 2

Verdict rule_soundness() {
  Verdict v;
  int instances = 0, matches = 0;
  for (RuleName r : kAllRules)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SoundnessReport rep = check_soundness(r, 200, seed);
      instances += rep.samples;
      matches += rep.matches_checked;
      v.require(rep.matches_checked > 0, std::string(rule_name(r)) + " seed " + std::to_string(seed) + ": no matches");
      v.require(rep.failures.empty(), std::string(rule_name(r)) + " seed " + std::to_string(seed) + ": " +
                                         std::to_string(rep.failures.size()) + " failures");
    }
  if (v.pass)
    v.detail = std::to_string(instances) + " instances, " + std::to_string(matches) + " rule applications, 0 failures";
  return v;
}

// ---------------------------------------------------------------- 3

Verdict derivation_replays() {
  Verdict v;
  const Complex a = std::polar(1.0, -std::numbers::pi / 3);
  const std::vector<std::pair<Derivation, Matrix>> expected = {
      {Derivation::Hopf, oracle::outer(oracle::basis(1, 0), oracle::plus())},
      {Derivation::RuleA, oracle::ket({1, a})},
      {Derivation::GhzPlug0, oracle::basis(2, 0)},
      {Derivation::GhzPlug1, oracle::basis(2, 3)},
      {Derivation::WPlug0, oracle::ket({0, 1, 1, 0})},
      {Derivation::WPlug1, oracle::basis(2, 0)},
      {Derivation::QkdCore, oracle::minus()},
  };
  std::string steps;
  for (const auto& [d, want] : expected) {
    try {
      const Trace t = replay_derivation(d);
      const Matrix got = oracle::brute_force(t.current());
      const bool ok = got.norm_inf() > 1e-9 && oracle::scalar_residual(got, want) <= 1e-9 * got.norm_inf();
      v.require(ok, std::string(derivation_name(d)) + " result differs");
      steps += std::string(steps.empty() ? "" : ", ") + derivation_name(d) + " " + std::to_string(t.size());
      if (d == Derivation::Hopf) v.require(t.size() == 6, "hopf is not 6 steps");
      if (d == Derivation::WPlug1) v.require(t.uses(RuleName::E), "w_plug1 does not use E");
      if (d == Derivation::QkdCore) v.require(t.steps().back().rule == "A", "qkd_core does not end with A");
    } catch (const std::exception& e) {
      v.require(false, std::string(derivation_name(d)) + ": " + e.what());
    }
  }
  if (v.pass) v.detail = "steps: " + steps;
  return v;
}

// ---------------------------------------------------------------- 4-6

Matrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return Matrix{{1, 0}, {0, 1}};
    case Pauli::X: return Matrix{{0, 1}, {1, 0}};
    case Pauli::Z: return Matrix{{1, 0}, {0, -1}};
    case Pauli::iY: return Matrix{{0, 1}, {-1, 0}};
    case Pauli::minus_iY: return Matrix{{0, -1}, {1, 0}};
  }
  return {};
}

// Permutation matrix of CNOT(control -> target) on n qubits, qubit 0 most significant.
Matrix cnot_matrix(std::size_t n, std::size_t control, std::size_t target) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const bool c = (i >> (n - 1 - control)) & 1;
    const std::size_t j = c ? i ^ (std::size_t{1} << (n - 1 - target)) : i;
    m(j, i) = 1.0;
  }
  return m;
}

// Dense GHZ-basis decode of the n-qubit GHZ state with paulis applied.
std::optional<std::size_t> dense_decode(const std::vector<Pauli>& ps) {
  const std::size_t n = ps.size();
  Matrix state = oracle::basis(n, 0) + oracle::basis(n, (std::size_t{1} << n) - 1);
  Matrix u;
  for (Pauli p : ps) u = kron(u, pauli_matrix(p));
  state = u * state;
  for (std::size_t t = 1; t < n; ++t) state = cnot_matrix(n, 0, t) * state;
  state = kron(Matrix{{kR, kR}, {kR, -kR}}, oracle::kron_power(Matrix{{1, 0}, {0, 1}}, n - 1)) * state;
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < state.size(); ++i)
    if (std::abs(state[i]) > 1e-9) {
      if (hit) return std::nullopt;
      hit = i;
    }
  return hit;
}

Verdict sdc_correctness() {
  Verdict v;
  int ok = 0;
  for (UnitaryTable table : {UnitaryTable::Standard, UnitaryTable::Alternative})
    for (int k = 0; k < 8; ++k) {
      const GhzClassIndex idx(k);
      const std::string id = std::string(table_name(table)) + " k=" + std::to_string(k);
      const auto u = encoding_unitaries(idx, table);
      const auto dense = dense_decode({Pauli::I, u[0], u[1]});
      v.require(dense && *dense == static_cast<std::size_t>(k), id + ": dense oracle disagrees with the table");
      try {
        const auto bits = sdc_decode(idx, table);
        const bool match = bits == idx.bits();
        v.require(match, id + " decoded wrong");
        ok += match;
      } catch (const DecodeError& e) {
        v.require(false, id + ": " + e.what());
      }
    }
  if (v.pass) v.detail = std::to_string(ok) + "/16 decoded to binary(k)";
  return v;
}

Verdict table_equivalence() {
  Verdict v;
  double worst = 0;
  for (int k = 0; k < 8; ++k) {
    const Matrix a = evaluate(ghz_class_state(GhzClassIndex(k), UnitaryTable::Standard));
    const Matrix b = evaluate(ghz_class_state(GhzClassIndex(k), UnitaryTable::Alternative));
    const EqualityVerdict e = equal_up_to_scalar(b, a, 1e-9);
    const double mod = e.scalar ? std::abs(*e.scalar) : 0;
    worst = std::max(worst, std::abs(mod - 1));
    v.require(e.equal && std::abs(mod - 1) <= 1e-9, "row " + std::to_string(k) + " differs");
  }
  if (v.pass) v.detail = "8/8 rows equal, scalars of modulus 1 within " + fmt("%.2g", worst);
  return v;
}

Verdict n_ghz_sdc() {
  Verdict v;
  std::string detail;
  for (std::size_t n : {4u, 5u}) {
    const ProtocolReport rep = sdc_n_ghz_verify(n);
    std::int64_t distinct = 0;
    for (const auto& [name, c] : rep.counts)
      if (name == "distinct outcomes") distinct = c;
    v.require(rep.passed() && distinct == (std::int64_t{1} << n), "n=" + std::to_string(n) + " has collisions");
    // oracle: the same encodings decoded with dense matrices
    std::set<std::size_t> seen;
    const std::array<Pauli, 4> last = {Pauli::I, Pauli::X, Pauli::iY, Pauli::Z};
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 2)); ++mask)
      for (Pauli pl : last) {
        std::vector<Pauli> ps{Pauli::I};
        for (std::size_t q = 0; q + 2 < n; ++q) ps.push_back(((mask >> q) & 1) ? Pauli::X : Pauli::I);
        ps.push_back(pl);
        if (const auto d = dense_decode(ps)) seen.insert(*d);
      }
    v.require(seen.size() == (std::size_t{1} << n), "dense oracle found collisions at n=" + std::to_string(n));
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(distinct) +
              " distinct";
  }
  if (v.pass) v.detail = detail;
  return v;
}

// ---------------------------------------------------------------- 7-8

Matrix effect(BasisPoint p) {
  switch (p) {
    case BasisPoint::ZPlus: return oracle::basis(1, 0);
    case BasisPoint::ZMinus: return oracle::basis(1, 1);
    case BasisPoint::XPlus: return oracle::plus();
    case BasisPoint::XMinus: return oracle::minus();
  }
  return {};
}

Verdict qkd_lemmas() {
  Verdict v;
  const Diagram w = w_state();
  double worst4 = 0, worst5 = 0;
  for (std::size_t wire = 0; wire < 3; ++wire) {
    const Matrix rest = oracle::brute_force(plug(w, Side::Output, wire, BasisPoint::ZMinus));
    const double r = oracle::scalar_residual(rest, oracle::basis(2, 0)) / std::max(rest.norm_inf(), 1e-300);
    worst4 = std::max(worst4, r);
    v.require(rest.norm_inf() > 1e-9 && r <= 1e-9, "z+ collapse fails on wire " + std::to_string(wire + 1));
  }
  const Matrix wv = oracle::brute_force(w);
  const Matrix unit = Complex(1.0 / wv.norm2()) * wv;
  for (std::size_t decider = 0; decider < 3; ++decider) {
    for (BasisPoint e1 : {BasisPoint::XPlus, BasisPoint::XMinus})
      for (BasisPoint e2 : {BasisPoint::XPlus, BasisPoint::XMinus}) {
        std::vector<Matrix> eff(3);
        eff[decider] = effect(BasisPoint::ZPlus);
        const auto pair = key_pair(static_cast<int>(decider));
        eff[static_cast<std::size_t>(pair[0])] = effect(e1);
        eff[static_cast<std::size_t>(pair[1])] = effect(e2);
        const Matrix bra = kron(kron(eff[0], eff[1]), eff[2]).adjoint();
        const double amp = std::abs((bra * unit)[0]);
        if (e1 != e2) {
          worst5 = std::max(worst5, amp);
          v.require(amp <= 1e-9, "x agreement: unequal outcomes possible, decider " + std::to_string(decider + 1));
        } else {
          v.require(amp > 1e-3, "x agreement: equal outcomes impossible, decider " + std::to_string(decider + 1));
        }
      }
  }
  const ProtocolReport rep = qkd_check_lemmas();
  v.require(rep.passed(), "library lemma report fails");
  if (v.pass)
    v.detail = "collapse residual " + fmt("%.2g", worst4) + ", unequal-outcome amplitude " + fmt("%.2g", worst5);
  return v;
}

Verdict qkd_monte_carlo() {
  Verdict v;
  const auto rounds = qkd_rounds(10000, 7);
  std::int64_t bases_ok = 0, plus = 0, unequal = 0;
  for (const QkdRound& r : rounds) {
    int zs = 0;
    for (Basis b : r.bases) zs += b == Basis::Z;
    v.require(r.bases_accepted == (zs == 1), "basis filter wrong");
    if (zs != 1) continue;
    ++bases_ok;
    if (!r.accepted) continue;
    ++plus;
    const auto pair = key_pair(*r.decider);
    if (r.outcomes[static_cast<std::size_t>(pair[0])] != r.outcomes[static_cast<std::size_t>(pair[1])]) ++unequal;
  }
  const double n = static_cast<double>(rounds.size());
  const double rate = static_cast<double>(bases_ok) / n, sd_rate = std::sqrt(3.0 / 8 * 5.0 / 8 / n);
  const double pz = static_cast<double>(plus) / static_cast<double>(bases_ok);
  const double sd_pz = std::sqrt(2.0 / 3 / 3 / static_cast<double>(bases_ok));
  v.require(unequal == 0, std::to_string(unequal) + " accepted rounds with unequal bits");
  v.require(std::abs(rate - 3.0 / 8) <= 3 * sd_rate, "acceptance rate " + fmt("%.4f", rate));
  v.require(std::abs(pz - 2.0 / 3) <= 3 * sd_pz, "P(z+) " + fmt("%.4f", pz));
  if (v.pass)
    v.detail = "unequal 0, acceptance " + fmt("%.4f", rate) + " (3/8 +- " + fmt("%.4f", 3 * sd_rate) + "), P(z+) " +
               fmt("%.4f", pz) + " (2/3 +- " + fmt("%.4f", 3 * sd_pz) + ")";
  return v;
}

// ---------------------------------------------------------------- 9

Diagram random_circuit(std::size_t k, std::mt19937_64& rng) {
  Diagram d = wires(k);
  std::uniform_int_distribution<int> pick(0, 4), wire(0, static_cast<int>(k) - 1), num(0, 7);
  for (int layer = 0; layer < 4; ++layer) {
    const std::size_t a = static_cast<std::size_t>(wire(rng));
    const Phase p(num(rng), 4);
    switch (pick(rng)) {
      case 0: d = compose_sequential(d, on_wire(k, a, spider(VertexKind::z(p), 1, 1))); break;
      case 1: d = compose_sequential(d, on_wire(k, a, spider(VertexKind::x(p), 1, 1))); break;
      case 2: d = compose_sequential(d, on_wire(k, a, hadamard())); break;
      case 3:
        if (k > 1) d = compose_sequential(d, cnot(k, a, (a + 1) % k));
        break;
      default: d = compose_sequential(d, spider(VertexKind::z(p), k, k)); break;
    }
  }
  return d;
}

Verdict structural_properties() {
  Verdict v;
  std::mt19937_64 rng(2026);
  double worst_relabel = 0, worst_seq = 0, worst_par = 0;
  for (int i = 0; i < 500; ++i) {
    const RuleName r = kAllRules[static_cast<std::size_t>(i) % kAllRules.size()];
    const Diagram d = random_instance(r, 99, static_cast<std::uint64_t>(i));
    const std::string id = "sample " + std::to_string(i);
    const Diagram back = parse_zxg(serialize_zxg(d));
    v.require(isomorphic(back, d), id + ": round trip not isomorphic");

    std::vector<VertexId> ids;
    for (const auto& [vid, k] : d.vertices()) ids.push_back(vid);
    std::vector<VertexId> shuffled = ids;
    std::ranges::shuffle(shuffled, rng);
    std::map<VertexId, VertexId> perm;
    for (std::size_t j = 0; j < ids.size(); ++j) perm[ids[j]] = shuffled[j] + 100;
    std::vector<std::size_t> order(d.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::ranges::shuffle(order, rng);
    const Matrix m = evaluate(d);
    const double rd = rel_diff(evaluate(relabel(d, perm, order)), m);
    worst_relabel = std::max(worst_relabel, rd);
    v.require(rd <= 1e-12, id + ": relabelling changed the value");

    const Diagram c = random_circuit(std::max<std::size_t>(d.outputs().size(), 1), rng);
    if (!d.outputs().empty()) {
      const double sd = rel_diff(evaluate(compose_sequential(d, c)), evaluate(c) * m);
      worst_seq = std::max(worst_seq, sd);
      v.require(sd <= 1e-12, id + ": sequential composition");
    }
    const double pd = rel_diff(evaluate(compose_parallel(d, c)), kron(m, evaluate(c)));
    worst_par = std::max(worst_par, pd);
    v.require(pd <= 1e-12, id + ": parallel composition");
  }
  if (v.pass)
    v.detail = "500 diagrams; worst relabel " + fmt("%.2g", worst_relabel) + ", sequential " + fmt("%.2g", worst_seq) +
               ", parallel " + fmt("%.2g", worst_par);
  return v;
}

// ---------------------------------------------------------------- 10

Verdict cli_determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {{"verify", "sdc-ghz"},
                                                          {"verify", "qkd-w3", "--rounds", "10000", "--seed", "7"}};
  std::string detail;
  for (const auto& args : commands) {
    std::ostringstream out1, out2, err;
    const int rc1 = cli::run(args, out1, err);
    const int rc2 = cli::run(args, out2, err);
    std::string cmd;
    for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
    v.require(rc1 == 0 && rc2 == 0, cmd + ": exit " + std::to_string(rc1) + "/" + std::to_string(rc2));
    v.require(out1.str() == out2.str(), cmd + ": output differs");
    detail += (detail.empty() ? "" : ", ") + cmd + " (" + std::to_string(out1.str().size()) + " bytes)";
  }
  if (v.pass) v.detail = "identical output, exit 0: " + detail;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"generator fidelity", generator_fidelity},
      {"rule soundness", rule_soundness},
      {"derivation replays", derivation_replays},
      {"SDC correctness", sdc_correctness},
      {"table equivalence", table_equivalence},
      {"N-GHZ SDC", n_ghz_sdc},
      {"QKD lemmas", qkd_lemmas},
      {"QKD Monte-Carlo", qkd_monte_carlo},
      {"structural properties", structural_properties},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("[%s] %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
