// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicke/circuit.hpp"

namespace dicke {

enum class Endianness { BigEndian, LittleEndian };
enum class Variant { Standard, Interleaved };

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view name);

class UnsupportedSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DickeSpec {
  int n = 2;
  int k = 1;
  TopologyKind topology = TopologyKind::LNN;
  Variant variant = Variant::Standard;

  auto operator<=>(const DickeSpec&) const = default;
};

std::string to_string(const DickeSpec& spec);

struct DivideCoefficients {
  std::vector<std::uint64_t> x;  // x_i = C(n1,i) C(n2,k-i)
  std::vector<std::uint64_t> s;  // suffix sums s_i = x_i + ... + x_k
};

DivideCoefficients divide_coefficients(int n1, int n2, int k);

// Appends U_{m,k} acting on `wires`, listed so that a weight-w unary input has
// its ones on wires[0..w-1]. Consecutive wires must be adjacent in
// `topology`, except that a "bent" triple (w0 adjacent to both w1 and w2) is
// also accepted; the construction picks whichever Givens orientation keeps
// every CNOT on an edge.
void append_dicke_unitary(Circuit& circuit, const std::vector<int>& wires, int k,
                          const Topology& topology);

// Big-endian accepts |0^{n-k'} 1^{k'}>; little-endian is its wire mirror.
Circuit build_dicke_unitary(int n, int k, Endianness endianness);

// Output of the divide stage: the preparation circuit plus where each block's
// unary register ended up, ones-first.
struct DivideStage {
  Circuit circuit;
  std::vector<int> upper;
  std::vector<int> lower;
  // Interleaved layout: the lower block holds copies of the upper chain, so
  // its weight is the complement until the terminal X gates.
  bool lower_complemented = false;
};

// Requires 1 <= k <= floor(n/2); spec.k is not complement-reduced here.
DivideStage build_divide_stage(const DickeSpec& spec);
Circuit build_divide_ladder(int n, int k);

Circuit build_dicke_circuit(const DickeSpec& spec);

// The fourteen published (spec -> CNOT count) entries.
const std::map<DickeSpec, std::size_t>& contract_cnot_table();

// Table lookup after complement reduction and Full-topology resolution.
std::optional<std::size_t> expected_cnot_count(const DickeSpec& spec);

// Topology actually used when building `spec` (Full resolves to Ladder when a
// ladder schedule exists, otherwise LNN).
TopologyKind resolved_topology(const DickeSpec& spec);

}  // namespace dicke
