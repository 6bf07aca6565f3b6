// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "dicke/circuit.hpp"
#include "dicke/metrics.hpp"
#include "dicke/noise.hpp"
#include "dicke/tomography.hpp"

namespace dicke {

using Json = nlohmann::json;

// Bitstrings list qubit 0 first, so they read like the ket labels.
std::string to_bitstring(std::uint64_t index, int n);
std::uint64_t from_bitstring(const std::string& bits);

// {num_qubits, gates: [{kind, target, control?, angle?}], label}
Json to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& j);

// {p1, p2, readout: [[eps0, eps1], ...]}
Json to_json(const NoiseModel& noise);
NoiseModel noise_model_from_json(const Json& j);

Json to_json(const MetricReport& report);

// {n, shots, entries: [{basis, counts: {bitstring: int}}]}; exact datasets
// carry "probabilities" instead of "counts" and shots = 0.
Json to_json(const TomographyDataset& data);
TomographyDataset tomography_dataset_from_json(const Json& j);

}  // namespace dicke
