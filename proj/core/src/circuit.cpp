// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/circuit.hpp"

#include <algorithm>
#include <cstdlib>

namespace dicke {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::PauliX: return "PauliX";
    case GateKind::RotY: return "RotY";
    case GateKind::Hadamard: return "Hadamard";
    case GateKind::SDagger: return "SDagger";
    case GateKind::CNot: return "CNot";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (GateKind k : {GateKind::PauliX, GateKind::RotY, GateKind::Hadamard,
                     GateKind::SDagger, GateKind::CNot}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

void validate_gate(const Gate& g) {
  const bool is_cnot = g.kind == GateKind::CNot;
  if (is_cnot != g.control.has_value())
    throw std::invalid_argument("control must be present exactly for CNot");
  if ((g.kind == GateKind::RotY) != g.angle.has_value())
    throw std::invalid_argument("angle must be present exactly for RotY");
  if (is_cnot && *g.control == g.target)
    throw std::invalid_argument("CNot control equals target");
}

Circuit::Circuit(int num_qubits, std::string label)
    : num_qubits_(num_qubits), label_(std::move(label)) {
  if (num_qubits <= 0) throw std::invalid_argument("num_qubits must be positive");
}

Circuit& Circuit::append(const Gate& gate) {
  validate_gate(gate);
  auto in_range = [this](int q) { return q >= 0 && q < num_qubits_; };
  if (!in_range(gate.target) || (gate.control && !in_range(*gate.control)))
    throw std::out_of_range("gate qubit index out of range");
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_)
    throw std::invalid_argument("appended circuit is wider than the host");
  for (const Gate& g : other.gates_) append(g);
  return *this;
}

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Full: return "full";
    case TopologyKind::LNN: return "lnn";
    case TopologyKind::Ladder: return "ladder";
  }
  return "?";
}

TopologyKind topology_kind_from_string(std::string_view name) {
  for (TopologyKind k : {TopologyKind::Full, TopologyKind::LNN, TopologyKind::Ladder}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown topology: " + std::string(name));
}

bool Topology::adjacent(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) return false;
  switch (kind) {
    case TopologyKind::Full:
      return true;
    case TopologyKind::LNN:
      return std::abs(a - b) == 1;
    case TopologyKind::Ladder: {
      const int n1 = num_qubits / 2;
      if (std::abs(a - b) == 1 && ((a < n1) == (b < n1))) return true;
      const int lo = std::min(a, b), hi = std::max(a, b);
      return lo < n1 && hi == 2 * n1 - 1 - lo;
    }
  }
  return false;
}

std::size_t cnot_count(const Circuit& circuit) {
  return static_cast<std::size_t>(std::count_if(
      circuit.gates().begin(), circuit.gates().end(),
      [](const Gate& g) { return g.kind == GateKind::CNot; }));
}

std::size_t cnot_depth(const Circuit& circuit) {
  std::vector<std::size_t> level(circuit.num_qubits(), 0);
  std::size_t depth = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::CNot) continue;
    const std::size_t v = std::max(level[*g.control], level[g.target]) + 1;
    level[*g.control] = level[g.target] = v;
    depth = std::max(depth, v);
  }
  return depth;
}

std::size_t total_depth(const Circuit& circuit) {
  std::vector<std::size_t> level(circuit.num_qubits(), 0);
  std::size_t depth = 0;
  for (const Gate& g : circuit.gates()) {
    std::size_t v = level[g.target] + 1;
    if (g.control) v = std::max(v, level[*g.control] + 1);
    level[g.target] = v;
    if (g.control) level[*g.control] = v;
    depth = std::max(depth, v);
  }
  return depth;
}

std::vector<TopologyViolation> validate_topology(const Circuit& circuit,
                                                 const Topology& topology) {
  if (topology.num_qubits != circuit.num_qubits())
    throw std::invalid_argument("topology and circuit qubit counts differ");
  std::vector<TopologyViolation> out;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::CNot && !topology.adjacent(*g.control, g.target))
      out.push_back({i, *g.control, g.target});
  }
  return out;
}

}  // namespace dicke
