// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/qasm.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <regex>
#include <sstream>
#include <vector>

namespace dicke {
namespace {

std::string format_angle(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::PauliX: os << "x q[" << g.target << "];\n"; break;
      case GateKind::RotY:
        os << "ry(" << format_angle(*g.angle) << ") q[" << g.target << "];\n";
        break;
      case GateKind::Hadamard: os << "h q[" << g.target << "];\n"; break;
      case GateKind::SDagger: os << "sdg q[" << g.target << "];\n"; break;
      case GateKind::CNot:
        os << "cx q[" << *g.control << "],q[" << g.target << "];\n";
        break;
    }
  }
  return os.str();
}

Circuit parse_qasm(std::string_view text) {
  static const std::regex kGate(
      R"(^([a-z]+)\s*(?:\(\s*([^)]*?)\s*\))?\s+q\[(\d+)\]\s*(?:,\s*q\[(\d+)\])?\s*;$)");
  static const std::regex kQreg(R"(^qreg\s+q\[(\d+)\]\s*;$)");

  enum class Stage { Version, Include, Qreg, Body } stage = Stage::Version;
  std::optional<Circuit> circuit;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.starts_with("//")) continue;
    const std::string s(line);
    std::smatch m;
    switch (stage) {
      case Stage::Version:
        if (s != "OPENQASM 2.0;") throw QasmError(line_no, "expected 'OPENQASM 2.0;'");
        stage = Stage::Include;
        continue;
      case Stage::Include:
        if (s == "include \"qelib1.inc\";") {
          stage = Stage::Qreg;
          continue;
        }
        [[fallthrough]];
      case Stage::Qreg: {
        if (!std::regex_match(s, m, kQreg)) throw QasmError(line_no, "expected 'qreg q[N];'");
        const int n = std::stoi(m[1]);
        if (n <= 0) throw QasmError(line_no, "register size must be positive");
        circuit.emplace(n);
        stage = Stage::Body;
        continue;
      }
      case Stage::Body:
        break;
    }
    if (!std::regex_match(s, m, kGate)) throw QasmError(line_no, "syntax error: " + s);
    const std::string name = m[1];
    const bool has_param = m[2].matched;
    const bool two_qubit = m[4].matched;
    const int a = std::stoi(m[3]);
    const int b = two_qubit ? std::stoi(m[4]) : -1;
    Gate g;
    if (name == "x" || name == "h" || name == "sdg") {
      if (has_param || two_qubit) throw QasmError(line_no, "bad operands for " + name);
      g = name == "x" ? Gate::x(a) : name == "h" ? Gate::h(a) : Gate::sdg(a);
    } else if (name == "ry") {
      if (!has_param || two_qubit) throw QasmError(line_no, "ry needs one angle and one qubit");
      const std::string p = m[2];
      double theta = 0;
      auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), theta);
      if (ec != std::errc() || end != p.data() + p.size())
        throw QasmError(line_no, "bad angle '" + p + "'");
      g = Gate::ry(a, theta);
    } else if (name == "cx") {
      if (has_param || !two_qubit) throw QasmError(line_no, "cx needs two qubits");
      g = Gate::cnot(a, b);
    } else {
      throw QasmError(line_no, "unsupported gate '" + name + "'");
    }
    try {
      circuit->append(g);
    } catch (const std::exception& e) {
      throw QasmError(line_no, e.what());
    }
  }
  if (!circuit) throw QasmError(line_no, "missing qreg declaration");
  return *std::move(circuit);
}

}  // namespace dicke
