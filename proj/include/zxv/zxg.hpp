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

// Line-based interchange format:
//
//   node <id> Z <phase> | node <id> X <phase> | node <id> H | node <id> B | node <id> D
//   edge <id> <id>
//   inputs <id> ...
//   outputs <id> ...
//
// Phases are in units of pi ("1" = pi, "1/2" = pi/2). '#' starts a comment.

#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxv/diagram.hpp"

namespace zxv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  /// 1-based source line, or 0 for whole-file validation failures.
  int line() const { return line_; }

 private:
  int line_;
};

inline Diagram parse_zxg(std::string_view text) {
  Diagram d;
  std::map<std::string, VertexId> ids;
  std::map<VertexId, std::string> names;
  bool have_inputs = false, have_outputs = false;

  auto fail = [](int line, const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line) + ": " + msg, line);
  };
  auto lookup = [&](int line, const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw fail(line, "unknown node '" + name + "'");
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& cmd = tok[0];
    if (cmd == "node") {
      if (tok.size() < 3) throw fail(line_no, "expected 'node <id> <type> [phase]'");
      const std::string& name = tok[1];
      if (ids.contains(name)) throw fail(line_no, "duplicate node '" + name + "'");
      const std::string& type = tok[2];
      VertexKind kind;
      if (type == "Z" || type == "X") {
        if (tok.size() != 4) throw fail(line_no, "spider '" + name + "' needs exactly one phase");
        Phase p;
        try {
          p = Phase::parse(tok[3]);
        } catch (const std::invalid_argument& e) {
          throw fail(line_no, e.what());
        }
        kind = type == "Z" ? VertexKind::z(p) : VertexKind::x(p);
      } else if (type == "H" || type == "B" || type == "D") {
        if (tok.size() != 3) throw fail(line_no, "unexpected token after '" + type + "'");
        kind = type == "H" ? VertexKind::h() : type == "B" ? VertexKind::boundary() : VertexKind::diamond();
      } else {
        throw fail(line_no, "unknown node type '" + type + "'");
      }
      const VertexId v = d.add_vertex(kind);
      ids[name] = v;
      names[v] = name;
    } else if (cmd == "edge") {
      if (tok.size() != 3) throw fail(line_no, "expected 'edge <id> <id>'");
      const VertexId a = lookup(line_no, tok[1]);
      const VertexId b = lookup(line_no, tok[2]);
      try {
        d.add_edge(a, b);
      } catch (const DiagramError& e) {
        const std::string who = names.at(e.vertex());
        throw fail(line_no, "vertex '" + who + "' (" + type_name(d.kind(e.vertex()).type) +
                                ") exceeds its degree cap");
      }
    } else if (cmd == "inputs" || cmd == "outputs") {
      bool& seen = cmd == "inputs" ? have_inputs : have_outputs;
      if (seen) throw fail(line_no, "repeated '" + cmd + "' directive");
      seen = true;
      std::vector<VertexId> list;
      for (std::size_t i = 1; i < tok.size(); ++i) list.push_back(lookup(line_no, tok[i]));
      if (cmd == "inputs")
        d.set_inputs(list);
      else
        d.set_outputs(list);
    } else {
      throw fail(line_no, "unknown directive '" + cmd + "'");
    }
  }

  try {
    d.validate();
  } catch (const DiagramError& e) {
    std::string msg = e.what();
    if (e.vertex() >= 0 && names.contains(e.vertex()))
      msg = "vertex '" + names.at(e.vertex()) + "': " + msg;
    throw ParseError("invalid diagram: " + msg, 0);
  }
  return d;
}

namespace detail {
inline std::string zxg_name(const Diagram& d, VertexId v) {
  return (d.kind(v).type == VertexType::Boundary ? "b" : "v") + std::to_string(v);
}
}  // namespace detail

inline std::string serialize_zxg(const Diagram& d) {
  std::ostringstream out;
  for (const auto& [v, k] : d.vertices()) {
    out << "node " << detail::zxg_name(d, v) << ' ' << type_name(k.type);
    if (k.is_spider()) out << ' ' << k.phase.to_string();
    out << '\n';
  }
  for (const auto& [id, e] : d.edges())
    out << "edge " << detail::zxg_name(d, e.a) << ' ' << detail::zxg_name(d, e.b) << '\n';
  if (!d.inputs().empty()) {
    out << "inputs";
    for (VertexId v : d.inputs()) out << ' ' << detail::zxg_name(d, v);
    out << '\n';
  }
  if (!d.outputs().empty()) {
    out << "outputs";
    for (VertexId v : d.outputs()) out << ' ' << detail::zxg_name(d, v);
    out << '\n';
  }
  return out.str();
}

inline std::string to_dot(const Diagram& d) {
  std::map<VertexId, std::string> labels;
  for (std::size_t i = 0; i < d.inputs().size(); ++i) labels[d.inputs()[i]] = "in " + std::to_string(i);
  for (std::size_t i = 0; i < d.outputs().size(); ++i) labels[d.outputs()[i]] = "out " + std::to_string(i);

  std::ostringstream out;
  out << "graph zx {\n";
  for (const auto& [v, k] : d.vertices()) {
    std::string label, attrs;
    switch (k.type) {
      case VertexType::Z:
        label = "Z:" + k.phase.pretty();
        attrs = ", style=filled, fillcolor=green";
        break;
      case VertexType::X:
        label = "X:" + k.phase.pretty();
        attrs = ", style=filled, fillcolor=red";
        break;
      case VertexType::H:
        label = "H";
        attrs = ", shape=box, style=filled, fillcolor=yellow";
        break;
      case VertexType::Boundary:
        label = labels.contains(v) ? labels[v] : "boundary";
        attrs = ", shape=box, style=filled, fillcolor=gray";
        break;
      case VertexType::Diamond:
        label = "√2";
        attrs = ", shape=diamond, style=filled, fillcolor=black, fontcolor=white";
        break;
    }
    out << "  n" << v << " [label=\"" << label << "\"" << attrs << "];\n";
  }
  for (const auto& [id, e] : d.edges()) out << "  n" << e.a << " -- n" << e.b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zxv
