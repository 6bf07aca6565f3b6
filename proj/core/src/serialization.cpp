// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "dicke/serialization.hpp"

#include <stdexcept>

namespace dicke {

std::string to_bitstring(std::uint64_t index, int n) {
  std::string s(n, '0');
  for (int q = 0; q < n; ++q)
    if (index & qubit_mask(n, q)) s[q] = '1';
  return s;
}

std::uint64_t from_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > 63) throw std::invalid_argument("bad bitstring length");
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bitstring: " + bits);
    v = (v << 1) | std::uint64_t(c == '1');
  }
  return v;
}

Json to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates()) {
    Json jg = {{"kind", std::string(to_string(g.kind))}, {"target", g.target}};
    if (g.control) jg["control"] = *g.control;
    if (g.angle) jg["angle"] = *g.angle;
    gates.push_back(std::move(jg));
  }
  return {{"num_qubits", c.num_qubits()}, {"gates", std::move(gates)}, {"label", c.label()}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c(j.at("num_qubits").get<int>(), j.value("label", std::string{}));
  for (const Json& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_string(jg.at("kind").get<std::string>());
    g.target = jg.at("target").get<int>();
    if (jg.contains("control")) g.control = jg["control"].get<int>();
    if (jg.contains("angle")) g.angle = jg["angle"].get<double>();
    c.append(g);
  }
  return c;
}

Json to_json(const NoiseModel& m) {
  Json ro = Json::array();
  for (const auto& r : m.readout) ro.push_back({r.p01, r.p10});
  return {{"p1", m.p1}, {"p2", m.p2}, {"readout", std::move(ro)}};
}

NoiseModel noise_model_from_json(const Json& j) {
  NoiseModel m;
  m.p1 = j.value("p1", 0.0);
  m.p2 = j.value("p2", 0.0);
  if (j.contains("readout")) {
    for (const Json& r : j["readout"]) {
      if (!r.is_array() || r.size() != 2)
        throw std::invalid_argument("readout entries must be [eps0, eps1] pairs");
      m.readout.push_back({r[0].get<double>(), r[1].get<double>()});
    }
  }
  m.validate();
  return m;
}

Json to_json(const MetricReport& r) {
  return {{"quantum_fidelity", r.quantum_fidelity},
          {"hellinger_fidelity", r.hellinger_fidelity},
          {"measured_success_probability", r.measured_success_probability},
          {"chain_satisfied", r.chain_satisfied},
          {"slack", {{"hellinger_minus_fidelity", r.slack_fidelity_hellinger},
                     {"success_minus_hellinger", r.slack_hellinger_success},
                     {"tolerance", r.tolerance}}}};
}

Json to_json(const TomographyDataset& d) {
  Json entries = Json::array();
  for (const auto& [label, f] : d.frequencies) {
    Json e = {{"basis", label}};
    if (d.shots > 0 && d.counts.contains(label)) {
      Json counts = Json::object();
      for (const auto& [idx, c] : d.counts.at(label)) counts[to_bitstring(idx, d.n)] = c;
      e["counts"] = std::move(counts);
    } else {
      Json probs = Json::object();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] > 0) probs[to_bitstring(i, d.n)] = f[i];
      e["probabilities"] = std::move(probs);
    }
    entries.push_back(std::move(e));
  }
  return {{"n", d.n}, {"shots", d.shots}, {"entries", std::move(entries)}};
}

TomographyDataset tomography_dataset_from_json(const Json& j) {
  TomographyDataset d;
  d.n = j.at("n").get<int>();
  d.shots = j.value("shots", std::uint64_t{0});
  for (const Json& e : j.at("entries")) {
    const std::string label = e.at("basis").get<std::string>();
    if (static_cast<int>(PauliBasis::from_string(label).axes.size()) != d.n)
      throw std::invalid_argument("basis label length differs from n: " + label);
    if (e.contains("counts")) {
      Counts c;
      for (const auto& [bits, v] : e["counts"].items()) c[from_bitstring(bits)] = v.get<std::uint64_t>();
      d.frequencies.emplace(label, empirical_distribution(c, d.n));
      d.counts.emplace(label, std::move(c));
    } else {
      std::vector<double> p(std::size_t{1} << d.n, 0.0);
      for (const auto& [bits, v] : e.at("probabilities").items()) p.at(from_bitstring(bits)) = v.get<double>();
      d.frequencies.emplace(label, Distribution(d.n, std::move(p)));
    }
  }
  return d;
}

}  // namespace dicke
