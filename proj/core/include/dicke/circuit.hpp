// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dicke {

enum class GateKind { PauliX, RotY, Hadamard, SDagger, CNot };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

struct Gate {
  GateKind kind = GateKind::PauliX;
  int target = 0;
  std::optional<int> control;  // CNot only
  std::optional<double> angle;  // RotY only, radians

  static Gate x(int q) { return {GateKind::PauliX, q, std::nullopt, std::nullopt}; }
  static Gate ry(int q, double theta) { return {GateKind::RotY, q, std::nullopt, theta}; }
  static Gate h(int q) { return {GateKind::Hadamard, q, std::nullopt, std::nullopt}; }
  static Gate sdg(int q) { return {GateKind::SDagger, q, std::nullopt, std::nullopt}; }
  static Gate cnot(int c, int t) { return {GateKind::CNot, t, c, std::nullopt}; }

  bool operator==(const Gate&) const = default;
};

// Throws std::invalid_argument if the field combination is inconsistent.
void validate_gate(const Gate& gate);

class Circuit {
 public:
  explicit Circuit(int num_qubits, std::string label = {});

  // Validates the gate against num_qubits before appending.
  Circuit& append(const Gate& gate);
  Circuit& append(const Circuit& other);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
  std::string label_;
};

enum class TopologyKind { Full, LNN, Ladder };

std::string_view to_string(TopologyKind kind);
TopologyKind topology_kind_from_string(std::string_view name);

struct Topology {
  TopologyKind kind = TopologyKind::Full;
  int num_qubits = 1;

  // Ladder rows: upper 0..n1-1, lower n1..n-1 with n1 = floor(n/2).
  // Rungs join i and 2*n1-1-i (0-based form of q_i ~ q_{2n1-i+1}).
  bool adjacent(int a, int b) const;
};

struct TopologyViolation {
  std::size_t position;
  int control;
  int target;
  bool operator==(const TopologyViolation&) const = default;
};

std::size_t cnot_count(const Circuit& circuit);

// Longest chain of CNOTs under as-soon-as-possible scheduling. Single-qubit
// gates never lengthen the chain.
std::size_t cnot_depth(const Circuit& circuit);

// ASAP depth counting every gate. Informational only.
std::size_t total_depth(const Circuit& circuit);

std::vector<TopologyViolation> validate_topology(const Circuit& circuit,
                                                 const Topology& topology);

}  // namespace dicke
