// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/builder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dicke/statevector.hpp"

namespace dicke {
namespace {

constexpr double kPi = std::numbers::pi;

// Half of theta_{sqrt x}: arccos(sqrt(x)).
double half_theta(double x) { return std::acos(std::sqrt(x)); }
double theta(double x) { return 2.0 * half_theta(x); }

// Keeps |00>, |11>; maps |10> (a=1) to cos(t)|10> + sin(t)|01>.
void givens(Circuit& c, int a, int b, double t) {
  c.append(Gate::ry(b, kPi / 2));
  c.append(Gate::cnot(b, a));
  c.append(Gate::ry(a, t));
  c.append(Gate::ry(b, t));
  c.append(Gate::cnot(b, a));
  c.append(Gate::ry(b, -kPi / 2));
}

// Two-qubit swap where the second operand is known to hold |0>.
void swap_into_zero(Circuit& c, int from, int zero) {
  c.append(Gate::cnot(from, zero));
  c.append(Gate::cnot(zero, from));
}

// Same, but the second operand is known to hold |1>.
void swap_into_one(Circuit& c, int from, int one) {
  c.append(Gate::x(one));
  swap_into_zero(c, from, one);
  c.append(Gate::x(from));
}

void full_swap(Circuit& c, int a, int b) {
  c.append(Gate::cnot(a, b));
  c.append(Gate::cnot(b, a));
  c.append(Gate::cnot(a, b));
}

// Removes X pairs on one qubit with nothing in between on that qubit.
Circuit cancel_adjacent_x(const Circuit& in) {
  std::vector<Gate> out;
  std::vector<std::vector<std::size_t>> last(in.num_qubits());
  std::vector<bool> dead;
  for (const Gate& g : in.gates()) {
    if (g.kind == GateKind::PauliX && !last[g.target].empty()) {
      const std::size_t prev = last[g.target].back();
      if (out[prev].kind == GateKind::PauliX) {
        dead[prev] = true;
        last[g.target].pop_back();
        continue;
      }
    }
    last[g.target].push_back(out.size());
    if (g.control) last[*g.control].push_back(out.size());
    out.push_back(g);
    dead.push_back(false);
  }
  Circuit result(in.num_qubits(), in.label());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!dead[i]) result.append(out[i]);
  return result;
}

int reduced_weight(const DickeSpec& s) { return s.k > s.n / 2 ? s.n - s.k : s.k; }

void check_divide_range(const DickeSpec& s) {
  if (s.n < 2 || s.k < 1 || s.k > s.n / 2)
    throw UnsupportedSpec("divide stage needs 1 <= k <= floor(n/2): " + to_string(s));
}

DivideStage divide_ladder(int n, int k) {
  const int n1 = n / 2, n2 = n - n1;
  const auto dc = divide_coefficients(n1, n2, k);
  const auto& s = dc.s;
  Circuit c(n);
  auto partner = [n1](int j) { return 2 * n1 - j; };  // partner of chain qubit j-1
  for (int j = 1; j <= k; ++j) c.append(Gate::x(partner(j)));
  c.append(Gate::ry(0, theta(double(dc.x[0]) / double(s[0]))));
  for (int i = 1; i < k; ++i) {
    const double alpha = half_theta(double(s[i + 1]) / double(s[i]));
    c.append(Gate::ry(i, alpha));
    c.append(Gate::cnot(i - 1, i));
    c.append(Gate::ry(i, -alpha));
  }
  for (int j = 1; j <= k; ++j) c.append(Gate::cnot(j - 1, partner(j)));

  DivideStage out{std::move(c), {}, {}, false};
  for (int q = 0; q < n1; ++q) out.upper.push_back(q);
  for (int j = k; j >= 1; --j) out.lower.push_back(partner(j));
  for (int q = 2 * n1 - k - 1; q >= n1; --q) out.lower.push_back(q);
  if (n % 2) out.lower.push_back(2 * n1);
  return out;
}

DivideStage divide_lnn_standard(int n, int k) {
  const int n1 = n / 2, n2 = n - n1;
  const auto dc = divide_coefficients(n1, n2, k);
  const auto& s = dc.s;
  Circuit c(n);
  // 1-based chain and partner positions, both growing outward from the cut.
  std::vector<int> cpos(k + 1), ppos(k + 1);
  for (int j = 1; j <= k; ++j) {
    cpos[j] = n1 - j;
    ppos[j] = n1 - 1 + j;
  }
  for (int j = 1; j <= k; ++j) c.append(Gate::x(ppos[j]));
  c.append(Gate::ry(cpos[1], theta(double(dc.x[0]) / double(s[0]))));
  for (int j = 1; j <= k; ++j) {
    c.append(Gate::cnot(cpos[j], ppos[j]));
    if (j == k) break;
    // Controlled rotation onto c_{j+1} merged with the swap that brings
    // c_{j+1} next to the cut; the target starts classical so 2 CNOTs do.
    const double alpha = half_theta(double(s[j + 1]) / double(s[j]));
    const int in = cpos[j], out = cpos[j + 1];
    c.append(Gate::ry(out, alpha));
    c.append(Gate::cnot(out, in));
    c.append(Gate::cnot(in, out));
    c.append(Gate::ry(in, -alpha));
    std::swap(cpos[j], cpos[j + 1]);
    for (int i = j + 2; i <= k; ++i) {
      swap_into_zero(c, cpos[j], cpos[i]);
      std::swap(cpos[j], cpos[i]);
    }
    for (int i = j + 1; i <= k; ++i) {
      swap_into_one(c, ppos[j], ppos[i]);
      std::swap(ppos[j], ppos[i]);
    }
  }

  DivideStage out{cancel_adjacent_x(c), {}, {}, false};
  for (int j = 1; j <= k; ++j) out.upper.push_back(cpos[j]);
  for (int q = n1 - k - 1; q >= 0; --q) out.upper.push_back(q);
  for (int j = k; j >= 1; --j) out.lower.push_back(ppos[j]);
  for (int q = n1 + k; q < n; ++q) out.lower.push_back(q);
  return out;
}

// Qubits alternate c_1 p_1 c_2 p_2 ...; partners receive copies, then an
// odd-even transposition network sorts chain qubits to the left.
DivideStage divide_lnn_interleaved(int n, int k) {
  if (n != 2 * k)
    throw UnsupportedSpec("interleaved layout needs n = 2k, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
  const auto dc = divide_coefficients(k, k, k);
  const auto& s = dc.s;
  Circuit c(n);
  c.append(Gate::ry(0, theta(double(dc.x[0]) / double(s[0]))));
  c.append(Gate::cnot(0, 1));
  for (int j = 2; j <= k; ++j) {
    const int cj = 2 * (j - 1), prev_copy = cj - 1;
    const double alpha = half_theta(double(s[j]) / double(s[j - 1]));
    c.append(Gate::ry(cj, alpha));
    c.append(Gate::cnot(prev_copy, cj));
    c.append(Gate::ry(cj, -alpha));
    c.append(Gate::cnot(cj, cj + 1));
  }
  // Sort key: chain qubit j -> j-1, copy j -> k+j-1.
  std::vector<int> key(n);
  for (int j = 1; j <= k; ++j) {
    key[2 * (j - 1)] = j - 1;
    key[2 * (j - 1) + 1] = k + j - 1;
  }
  for (int round = 0; !std::is_sorted(key.begin(), key.end()); ++round) {
    for (int a = round % 2; a + 1 < n; a += 2) {
      if (key[a] > key[a + 1]) {
        full_swap(c, a, a + 1);
        std::swap(key[a], key[a + 1]);
      }
    }
  }
  DivideStage out{std::move(c), {}, {}, true};
  for (int q = 0; q < k; ++q) out.upper.push_back(q);
  for (int q = k; q < n; ++q) out.lower.push_back(q);
  return out;
}

}  // namespace

std::string_view to_string(Variant v) {
  return v == Variant::Standard ? "standard" : "interleaved";
}

Variant variant_from_string(std::string_view name) {
  if (name == "standard") return Variant::Standard;
  if (name == "interleaved") return Variant::Interleaved;
  throw std::invalid_argument("unknown variant: " + std::string(name));
}

std::string to_string(const DickeSpec& s) {
  return "D(" + std::to_string(s.n) + "," + std::to_string(s.k) + ")/" +
         std::string(to_string(s.topology)) + "/" + std::string(to_string(s.variant));
}

DivideCoefficients divide_coefficients(int n1, int n2, int k) {
  if (n1 < 0 || n2 < 0 || k < 0 || k > n1 + n2)
    throw std::invalid_argument("divide_coefficients: k out of range");
  DivideCoefficients d;
  d.x.resize(k + 1);
  d.s.resize(k + 1);
  for (int i = 0; i <= k; ++i) d.x[i] = binomial(n1, i) * binomial(n2, k - i);
  std::uint64_t acc = 0;
  for (int i = k; i >= 0; --i) d.s[i] = acc += d.x[i];
  return d;
}

void append_dicke_unitary(Circuit& c, const std::vector<int>& wires, int k,
                          const Topology& topo) {
  if (k < 1) throw std::invalid_argument("dicke unitary needs k >= 1");
  std::vector<int> pos = wires;
  while (pos.size() >= 2) {
    const int m = static_cast<int>(pos.size());
    const int K = std::min(k, m - 1);
    if (k == 1) {
      const double t = theta(double(m - 1) / m);
      c.append(Gate::ry(pos[1], t / 2));
      c.append(Gate::cnot(pos[0], pos[1]));
      c.append(Gate::ry(pos[1], -t / 2));
      c.append(Gate::cnot(pos[1], pos[0]));
      pos.erase(pos.begin());
      continue;
    }
    // The qubit being decided ("lead") starts on pos[0]. In the swapping
    // orientation it ends on pos[1]; otherwise it stays, which suits a bent
    // layout where pos[0] touches pos[2] but pos[1] does not.
    const bool swapped =
        K < 2 || topo.adjacent(pos[1], pos[2]) || !topo.adjacent(pos[0], pos[2]);
    const int a = pos[0], b = pos[1];
    givens(c, a, b, swapped ? half_theta(double(m - 1) / m) : half_theta(1.0 / m));
    int lead = swapped ? b : a;
    std::vector<int> next(pos.begin() + 1, pos.end());
    next[0] = swapped ? a : b;
    for (int l = 2; l <= K; ++l) {
      const int ctl = next[l - 2], z = pos[l];
      const double t = half_theta(double(l) / m) / 2;
      c.append(Gate::cnot(lead, z));
      c.append(Gate::ry(lead, -t));
      c.append(Gate::cnot(ctl, lead));
      c.append(Gate::ry(lead, t));
      c.append(Gate::cnot(z, lead));
      c.append(Gate::ry(lead, -t));
      c.append(Gate::cnot(ctl, lead));
      c.append(Gate::ry(lead, t));
      c.append(Gate::cnot(lead, z));
      next[l - 1] = lead;
      lead = z;
    }
    // Remaining wires are still |0>; walk the lead past them.
    for (int j = K + 1; j < m; ++j) {
      swap_into_zero(c, lead, pos[j]);
      next[j - 1] = lead;
      lead = pos[j];
    }
    pos = std::move(next);
  }
}

Circuit build_dicke_unitary(int n, int k, Endianness e) {
  if (n < 1 || k < 1 || k > n) throw UnsupportedSpec("dicke unitary needs 1 <= k <= n");
  Circuit c(n, "U(" + std::to_string(n) + "," + std::to_string(k) + ")" +
                   (e == Endianness::BigEndian ? "be" : "le"));
  std::vector<int> wires(n);
  for (int i = 0; i < n; ++i) wires[i] = e == Endianness::BigEndian ? n - 1 - i : i;
  append_dicke_unitary(c, wires, k, Topology{TopologyKind::LNN, n});
  return c;
}

TopologyKind resolved_topology(const DickeSpec& s) {
  const int k = reduced_weight(s);
  if (s.topology == TopologyKind::LNN) return TopologyKind::LNN;
  if (s.variant == Variant::Interleaved) return TopologyKind::LNN;
  return k >= 2 ? TopologyKind::Ladder : TopologyKind::LNN;
}

DivideStage build_divide_stage(const DickeSpec& spec) {
  check_divide_range(spec);
  const TopologyKind topo = resolved_topology(spec);
  if (spec.variant == Variant::Interleaved) {
    if (spec.topology != TopologyKind::LNN)
      throw UnsupportedSpec("interleaved variant exists only for LNN: " + to_string(spec));
    return divide_lnn_interleaved(spec.n, spec.k);
  }
  return topo == TopologyKind::Ladder ? divide_ladder(spec.n, spec.k)
                                      : divide_lnn_standard(spec.n, spec.k);
}

Circuit build_divide_ladder(int n, int k) {
  check_divide_range({n, k, TopologyKind::Ladder, Variant::Standard});
  return divide_ladder(n, k).circuit;
}

Circuit build_dicke_circuit(const DickeSpec& spec) {
  if (spec.n < 2 || spec.k < 1 || spec.k > spec.n - 1)
    throw UnsupportedSpec("need 2 <= n and 1 <= k <= n-1: " + to_string(spec));
  const bool complement = spec.k > spec.n / 2;
  DickeSpec inner = spec;
  inner.k = reduced_weight(spec);

  DivideStage stage = build_divide_stage(inner);
  const Topology topo{resolved_topology(spec), spec.n};
  Circuit c(spec.n, to_string(spec));
  c.append(stage.circuit);
  append_dicke_unitary(c, stage.upper, inner.k, topo);
  append_dicke_unitary(c, stage.lower, inner.k, topo);
  if (stage.lower_complemented)
    for (int q : stage.lower) c.append(Gate::x(q));
  if (complement)
    for (int q = 0; q < spec.n; ++q) c.append(Gate::x(q));

  if (!validate_topology(c, topo).empty())
    throw UnsupportedSpec("construction does not fit the topology: " + to_string(spec));
  return c;
}

const std::map<DickeSpec, std::size_t>& contract_cnot_table() {
  using T = TopologyKind;
  using V = Variant;
  static const std::map<DickeSpec, std::size_t> table = {
      {{2, 1, T::LNN, V::Standard}, 1},     {{3, 1, T::LNN, V::Standard}, 3},
      {{4, 1, T::LNN, V::Standard}, 5},     {{5, 1, T::LNN, V::Standard}, 7},
      {{6, 1, T::LNN, V::Standard}, 9},     {{4, 2, T::LNN, V::Standard}, 10},
      {{5, 2, T::LNN, V::Standard}, 17},    {{6, 2, T::LNN, V::Standard}, 24},
      {{6, 3, T::LNN, V::Standard}, 33},    {{6, 3, T::LNN, V::Interleaved}, 32},
      {{4, 2, T::Ladder, V::Standard}, 7},  {{5, 2, T::Ladder, V::Standard}, 14},
      {{6, 2, T::Ladder, V::Standard}, 21}, {{6, 3, T::Ladder, V::Standard}, 23},
  };
  return table;
}

std::optional<std::size_t> expected_cnot_count(const DickeSpec& spec) {
  DickeSpec key = spec;
  key.k = reduced_weight(spec);
  key.topology = resolved_topology(spec);
  const auto& t = contract_cnot_table();
  const auto it = t.find(key);
  if (it == t.end()) return std::nullopt;
  return it->second;
}

}  // namespace dicke
