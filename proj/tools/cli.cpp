// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <stdexcept>

#include "dicke/builder.hpp"
#include "dicke/metrics.hpp"
#include "dicke/qasm.hpp"
#include "dicke/serialization.hpp"
#include "dicke/tomography.hpp"

namespace dicke::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int k = -1;
  std::string topology = "lnn";
  std::string variant = "standard";
  std::string noise_path;
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> seed;
  bool mitigate = false;
  bool tomography = false;
  std::string out_path;
  std::string format = "csv";
  // Set when the user passed the flag explicitly; sweep uses these as filters.
  bool topology_given = false;
  bool variant_given = false;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

DickeSpec spec_from(const Options& o) {
  if (o.n <= 0 || o.k < 0) throw UsageError("--n and --k are required");
  return {o.n, o.k, topology_kind_from_string(o.topology), variant_from_string(o.variant)};
}

NoiseModel noise_from(const Options& o) {
  if (o.noise_path.empty()) return NoiseModel::uniform(0.001, 0.01, 0.02);
  std::ifstream in(o.noise_path);
  if (!in) throw UsageError("cannot open noise model " + o.noise_path);
  NoiseModel m = noise_model_from_json(Json::parse(in));
  m.validate();
  return m;
}

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open output " + path);
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// Spec labels such as D(4,2)/lnn/standard contain commas, so quote per RFC 4180.
std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"") == std::string::npos) return cell;
  std::string q = "\"";
  for (char c : cell) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
  os << '\n';
}

int cmd_build(const Options& o, std::ostream& out) {
  const DickeSpec spec = spec_from(o);
  const Circuit c = build_dicke_circuit(spec);
  const auto violations = validate_topology(c, Topology{resolved_topology(spec), spec.n});
  const auto contract = expected_cnot_count(spec);
  const bool ok = violations.empty() && (!contract || *contract == cnot_count(c));
  const std::string qasm = to_qasm(c);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) throw UsageError("cannot open output " + o.out_path);
    f << qasm;
  }
  if (o.format == "json") {
    Json j{{"spec", to_string(spec)},
           {"cnot_count", cnot_count(c)},
           {"cnot_depth", cnot_depth(c)},
           {"contract_cnot_count", contract ? Json(*contract) : Json(nullptr)},
           {"topology_violations", violations.size()}};
    if (o.out_path.empty()) j["qasm"] = qasm;
    out << j.dump(2) << '\n';
  } else {
    // Stats are QASM comments so stdout stays parseable as a program.
    if (o.out_path.empty()) out << qasm;
    out << "// spec: " << to_string(spec) << '\n'
        << "// cnot_count: " << cnot_count(c) << '\n'
        << "// cnot_depth: " << cnot_depth(c) << '\n'
        << "// contract_cnot_count: " << (contract ? std::to_string(*contract) : "none") << '\n'
        << "// topology: " << (violations.empty() ? "ok" : std::to_string(violations.size()) + " violations")
        << '\n';
  }
  return ok ? kOk : kContractViolation;
}

int cmd_table(const Options& o, std::ostream& out) {
  Sink sink(o.out_path, out);
  bool all_ok = true;
  Json rows = Json::array();
  if (o.format == "csv") write_csv_row(*sink, {"spec", "n", "k", "topology", "variant", "cnot_count", "contract",
                                               "cnot_depth", "match"});
  for (const auto& [spec, contract] : contract_cnot_table()) {
    std::size_t count = 0, depth = 0;
    bool ok = true;
    try {
      const Circuit c = build_dicke_circuit(spec);
      count = cnot_count(c);
      depth = cnot_depth(c);
      ok = count == contract;
    } catch (const std::exception&) {
      ok = false;
    }
    all_ok &= ok;
    if (o.format == "csv") {
      write_csv_row(*sink, {to_string(spec), std::to_string(spec.n), std::to_string(spec.k),
                            std::string(to_string(spec.topology)), std::string(to_string(spec.variant)),
                            std::to_string(count), std::to_string(contract), std::to_string(depth),
                            ok ? "yes" : "no"});
    } else {
      rows.push_back({{"spec", to_string(spec)}, {"cnot_count", count}, {"contract", contract},
                      {"cnot_depth", depth}, {"match", ok}});
    }
  }
  if (o.format == "json") *sink << Json{{"rows", rows}, {"all_match", all_ok}}.dump(2) << '\n';
  return all_ok ? kOk : kContractViolation;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const DickeSpec spec = spec_from(o);
  const Circuit c = build_dicke_circuit(spec);
  const double f = overlap_squared(dicke_statevector(spec.n, spec.k), run(c, 0));
  const bool ok = f >= 1 - 1e-9;
  Sink sink(o.out_path, out);
  if (o.format == "json") {
    *sink << Json{{"spec", to_string(spec)}, {"fidelity", f}, {"ok", ok}}.dump(2) << '\n';
  } else {
    write_csv_row(*sink, {"spec", "fidelity", "ok"});
    write_csv_row(*sink, {to_string(spec), num(f), ok ? "yes" : "no"});
  }
  return ok ? kOk : kContractViolation;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  Sink sink(o.out_path, out);
  bool all_ok = true;
  Json rows = Json::array();
  if (o.format == "csv") write_csv_row(*sink, {"n", "k", "product_bound", "builder_fidelity", "ok"});
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const double bound = product_state_fidelity_bound(n, k);
      const Circuit c = build_dicke_circuit({n, k, TopologyKind::LNN, Variant::Standard});
      const double f = overlap_squared(dicke_statevector(n, k), run(c, 0));
      const bool ok = f > bound;
      all_ok &= ok;
      if (o.format == "csv")
        write_csv_row(*sink, {std::to_string(n), std::to_string(k), num(bound), num(f), ok ? "yes" : "no"});
      else
        rows.push_back({{"n", n}, {"k", k}, {"product_bound", bound}, {"builder_fidelity", f}, {"ok", ok}});
    }
  }
  if (o.format == "json") *sink << Json{{"rows", rows}, {"all_ok", all_ok}}.dump(2) << '\n';
  return all_ok ? kOk : kContractViolation;
}

std::vector<DickeSpec> sweep_specs(const Options& o) {
  if (o.n > 0) return {spec_from(o)};
  std::vector<DickeSpec> specs;
  for (const auto& [spec, count] : contract_cnot_table()) {
    if (o.topology_given && to_string(spec.topology) != o.topology) continue;
    if (o.variant_given && to_string(spec.variant) != o.variant) continue;
    specs.push_back(spec);
  }
  if (specs.empty()) throw UsageError("no table spec matches the filters");
  return specs;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.shots > 0 && !o.seed) throw UsageError("--seed is required when --shots > 0");
  const NoiseModel noise = noise_from(o);
  const auto specs = sweep_specs(o);
  std::mt19937_64 rng(o.seed.value_or(0));

  std::vector<std::vector<std::string>> rows;
  std::vector<double> cnots, fids;
  for (const DickeSpec& spec : specs) {
    const Circuit c = build_dicke_circuit(spec);
    const StateVector target = dicke_statevector(spec.n, spec.k);
    const DensityMatrix rho = run_noisy(c, noise);
    const CalibrationMatrix cal = build_calibration_matrix(noise, spec.n);
    const MetricReport device = metric_report(spec.n, spec.k, rho);
    Distribution observed = apply_readout_noise(measurement_distribution(rho), cal);
    if (o.shots > 0) observed = empirical_distribution(sample(observed, o.shots, rng), spec.n);
    const MetricReport readout = metric_report(spec.n, spec.k, rho, observed);

    std::string h_mit, m_mit, clipped, f_tomo, f_tomo_mit;
    if (o.mitigate) {
      const MitigationResult fixed = mitigate(observed, cal);
      const MetricReport r = metric_report(spec.n, spec.k, rho, fixed.distribution);
      h_mit = num(r.hellinger_fidelity);
      m_mit = num(r.measured_success_probability);
      clipped = num(fixed.clipped_mass);
    }
    if (o.tomography && spec.n <= 4) {
      const TomographyDataset data = simulate_tomography(c, noise, o.shots, rng);
      f_tomo = num(quantum_fidelity(target, reconstruct(data)));
      if (o.mitigate) f_tomo_mit = num(quantum_fidelity(target, reconstruct(mitigate_dataset(data, cal))));
    }
    const std::size_t count = cnot_count(c);
    cnots.push_back(double(count));
    fids.push_back(device.quantum_fidelity);
    rows.push_back({to_string(spec), std::to_string(spec.n), std::to_string(spec.k),
                    std::string(to_string(spec.topology)), std::string(to_string(spec.variant)),
                    std::to_string(count), std::to_string(cnot_depth(c)), num(device.quantum_fidelity),
                    num(device.hellinger_fidelity), num(device.measured_success_probability),
                    num(readout.hellinger_fidelity), num(readout.measured_success_probability), h_mit, m_mit,
                    clipped, f_tomo, f_tomo_mit});
  }

  double rho_s = std::nan("");
  try {
    rho_s = spearman(cnots, fids);
  } catch (const std::invalid_argument&) {
    // Fewer than two rows or constant CNOT counts: no correlation to report.
  }

  Sink sink(o.out_path, out);
  if (o.format == "csv") {
    write_csv_row(*sink, sweep_columns());
    for (const auto& r : rows) write_csv_row(*sink, r);
    *sink << "# spearman_F_vs_cnot," << num(rho_s) << '\n';
  } else {
    Json jr = Json::array();
    for (const auto& r : rows) {
      Json obj;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const std::string& col = sweep_columns()[i];
        if (r[i].empty()) obj[col] = nullptr;
        else if (i < 5) obj[col] = (i == 1 || i == 2) ? Json(std::stoi(r[i])) : Json(r[i]);
        else obj[col] = std::stod(r[i]);
      }
      jr.push_back(std::move(obj));
    }
    *sink << Json{{"rows", jr}, {"spearman_F_vs_cnot", std::isnan(rho_s) ? Json(nullptr) : Json(rho_s)}}.dump(2)
          << '\n';
  }
  return kOk;
}

void add_spec_options(CLI::App* sub, Options& o, bool required) {
  auto* n = sub->add_option("--n", o.n, "number of qubits")->check(CLI::Range(1, 62));
  auto* k = sub->add_option("--k", o.k, "Hamming weight")->check(CLI::NonNegativeNumber);
  if (required) {
    n->required();
    k->required();
  }
  sub->add_option("--topology", o.topology)->check(CLI::IsMember({"lnn", "ladder", "full"}));
  sub->add_option("--variant", o.variant)->check(CLI::IsMember({"standard", "interleaved"}));
}

void add_output_options(CLI::App* sub, Options& o, const std::string& out_help) {
  sub->add_option("--out", o.out_path, out_help);
  sub->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "spec",     "n",           "k",           "topology",    "variant",     "cnot_count",
      "cnot_depth", "F",         "H",           "M",           "H_readout",   "M_readout",
      "H_mitigated", "M_mitigated", "clipped_mass", "F_tomography", "F_tomography_mitigated"};
  return cols;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dicke state preparation circuits: build, check and simulate", "dicke"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "emit the QASM circuit and its CNOT statistics");
  add_spec_options(build, o, true);
  add_output_options(build, o, "QASM output path");

  auto* table = app.add_subcommand("table", "compare CNOT counts against the contract table");
  add_output_options(table, o, "output path");

  auto* verify = app.add_subcommand("verify", "check the noiseless output state");
  add_spec_options(verify, o, true);
  add_output_options(verify, o, "output path");

  auto* sweep = app.add_subcommand("sweep", "noisy metrics per spec, with optional mitigation and tomography");
  add_spec_options(sweep, o, false);
  add_output_options(sweep, o, "output path");
  sweep->add_option("--noise", o.noise_path, "noise model JSON path");
  sweep->add_option("--shots", o.shots, "shots per circuit; 0 keeps exact distributions");
  sweep->add_option("--seed", o.seed, "RNG seed, required with --shots");
  sweep->add_flag("--mitigate", o.mitigate, "apply readout mitigation");
  sweep->add_flag("--tomography", o.tomography, "state tomography for n <= 4");

  auto* bounds = app.add_subcommand("bounds", "product-state fidelity bounds against builder circuits");
  add_output_options(bounds, o, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }
  o.topology_given = sweep->count("--topology") > 0;
  o.variant_given = sweep->count("--variant") > 0;
  if (sweep->parsed() && o.n > 0 && o.k < 0) {
    err << "error: --k is required with --n\n";
    return kUsageError;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    return cmd_bounds(o, out);
  } catch (const std::exception& e) {
    // Bad specs, unreadable files and malformed noise models are all input errors.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dicke"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(int(argv.size()), argv.data(), out, err);
}

}  // namespace dicke::cli
