// Copyright 2026 The qitk Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "qitk/algorithms.hpp"
#include "qitk/bell.hpp"
#include "qitk/channels.hpp"
#include "qitk/entanglement.hpp"
#include "qitk/infotheory.hpp"
#include "qitk/io.hpp"
#include "qitk/synthesis.hpp"

namespace qitk::cli {

namespace {

using io::json;

json num(double value, const std::string& formula = "computed") {
  json j;
  if (std::isfinite(value)) {
    j["value"] = value;
  } else {
    j["value"] = nullptr;
  }
  j["formula"] = formula;
  return j;
}

json num(int value, const std::string& formula = "computed") {
  return {{"value", value}, {"formula", formula}};
}

json num_list(const std::vector<double>& values, const std::string& formula = "computed") {
  return {{"value", values}, {"formula", formula}};
}

// Structured payload (matrix, state, circuit) carried under the same keys.
json tagged(json payload, const std::string& formula) { return {{"value", std::move(payload)}, {"formula", formula}}; }

// Raised for CLI-level input problems that are not library errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> table;
  std::string table_file;
  int n = 0;
  std::vector<std::uint64_t> solutions;
  std::string k = "auto";
  bool distribution = false;
  double phi = 0.0;
  int bits = 0;
  bool emit_matrix = false;
  std::string name;
  double param = 0.0;
  std::string apply_file;
  std::string channel_file;
  int subsystem = -1;
  std::string a_file;
  std::string b_file;
  std::string measure = "trace";
  std::string state_file;
  std::vector<int> partition;
  std::vector<std::string> report_items;
  std::string ensemble_file;
  std::vector<std::string> measures;
  std::string bell;
  bool optimize = false;
  std::vector<double> angles;
  int classical = 0;
  std::string unitary_file;
  std::string method = "two-level";
  double epsilon = 0.2;
  int max_len = 30;
  std::string what;
  double from = 0.0;
  double to = 1.0;
  double step = 0.05;
};

std::uint64_t require_seed(const Options& o, const std::string& why) {
  if (!o.seed) throw UsageError("--seed is required for " + why);
  return *o.seed;
}

json seed_json(const Options& o) { return o.seed ? json(*o.seed) : json(nullptr); }

json make_report(const std::string& command, json inputs, json results, const Options& o) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
          {"seed", seed_json(o)}};
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string bits_of(std::uint64_t v, int n) {
  std::string s;
  for (int k = n - 1; k >= 0; --k) s.push_back(((v >> k) & 1) ? '1' : '0');
  return s;
}

int log2_exact(std::size_t size) {
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if ((std::size_t{1} << n) != size) throw UsageError("table length must be a power of two");
  return n;
}

// Reinterprets the tensor factorization when --partition is given.
DensityMatrix with_partition(const DensityMatrix& rho, const std::vector<int>& partition) {
  if (partition.empty()) return rho;
  return DensityMatrix(partition, rho.matrix(), 1e-8);
}

io::AnyState load_state(const std::string& path, const std::vector<int>& partition) {
  if (path.empty()) throw UsageError("--state is required");
  io::AnyState s = io::state_from_json(io::read_json_file(path), global_tolerance());
  if (partition.empty()) return s;
  if (const auto* psi = std::get_if<StateVector>(&s)) return StateVector(partition, psi->amplitudes(), 1e-8);
  return with_partition(std::get<DensityMatrix>(s), partition);
}

DensityMatrix as_density(const io::AnyState& s) {
  if (const auto* psi = std::get_if<StateVector>(&s)) return DensityMatrix(*psi);
  return std::get<DensityMatrix>(s);
}

double sample_index(const std::vector<double>& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc += p[k];
    if (u < acc) return static_cast<double>(k);
  }
  return static_cast<double>(p.size() - 1);
}

// Subcommand handlers.

json cmd_deutsch(const Options& o) {
  const BooleanOracle f = BooleanOracle::make(1, 1, o.table);
  const DeutschReport r = deutsch(f);
  json results = {{"result", r.result == DeutschResult::kConstant ? "constant" : "balanced"},
                  {"p_one", num(r.p_one, "probability of reading 1 on the query wire")},
                  {"oracle_calls", num(r.oracle_calls, "oracle nodes in the circuit")}};
  return make_report("deutsch", {{"table", o.table}}, results, o);
}

json cmd_simon(const Options& o) {
  std::vector<std::uint64_t> table = o.table;
  if (!o.table_file.empty()) {
    const json j = io::read_json_file(o.table_file);
    const json& t = j.is_object() ? j.at("table") : j;
    if (!t.is_array()) throw Error(ErrorKind::kInvalidArgument, "table file must hold an array");
    table.clear();
    for (const json& x : t) {
      if (!x.is_number_unsigned()) throw Error(ErrorKind::kInvalidArgument, "table entries must be nonnegative integers");
      table.push_back(x.get<std::uint64_t>());
    }
  }
  if (table.empty()) throw UsageError("--table or --table-file is required");
  const std::uint64_t seed = require_seed(o, "simon");
  const int n = log2_exact(table.size());
  const SimonReport r = simon(BooleanOracle::make(n, n, table), seed);
  std::vector<double> samples(r.samples.begin(), r.samples.end());
  json results = {{"s", num(static_cast<double>(r.s), "nonzero null vector of the sampled GF(2) system")},
                  {"s_binary", bits_of(r.s, n)},
                  {"oracle_calls", num(r.oracle_calls, "circuit runs until rank n-1")},
                  {"samples", num_list(samples, "measured input register per run")}};
  return make_report("simon", {{"table", table}, {"n", n}}, results, o);
}

json cmd_grover(const Options& o) {
  const GroverInstance inst = GroverInstance::make(o.n, o.solutions);
  const int k0 = grover_k0(inst.N(), inst.M());
  int k = k0;
  if (o.k != "auto") {
    try {
      std::size_t used = 0;
      k = std::stoi(o.k, &used);
      if (used != o.k.size()) throw std::invalid_argument("k");
    } catch (const std::exception&) {
      throw UsageError("--k must be \"auto\" or a nonnegative integer");
    }
    if (k < 0) throw UsageError("--k must be nonnegative");
  }
  const std::vector<double> dist = grover(inst, k);
  double success = 0.0;
  for (std::uint64_t s : inst.solutions) success += dist[s];
  const double theta = grover_theta(inst.N(), inst.M());
  json results = {
      {"theta", num(theta, "sin(theta/2) = sqrt(M/N)")},
      {"k0", num(k0, "smallest k >= 0 with k + 1/2 >= pi/(2 theta) - 1/2")},
      {"k", num(k, k == k0 ? "k0" : "requested")},
      {"success", num(success, "circuit simulation")},
      {"success_closed_form", num(grover_success(inst, k), "sin^2((2k+1) theta/2)")},
      {"failure_bound", num(static_cast<double>(inst.M()) / inst.N(), "M/N")},
      {"oracle_calls", num(k, "one oracle per iteration")}};
  if (o.distribution) results["distribution"] = num_list(dist, "circuit simulation");
  if (o.seed) results["sample"] = num(sample_index(dist, *o.seed), "seeded draw from the distribution");
  return make_report("grover", {{"n", o.n}, {"solutions", inst.solutions}, {"k", o.k}}, results, o);
}

json cmd_phase(const Options& o) {
  if (!(o.phi >= 0.0 && o.phi < 1.0)) throw UsageError("--phi must lie in [0, 1)");
  if (o.bits < 1 || o.bits > 12) throw UsageError("--bits must lie in 1..12");
  Matrix u = Matrix::Identity(2, 2);
  u(1, 1) = std::polar(1.0, 2 * std::numbers::pi * o.phi);
  const PhaseEstimationInstance inst{u, StateVector::qubits(1, 1), o.bits};
  const PhaseReport r = phase_estimate(inst);
  json results = {
      {"estimate", num(r.estimate, "best_index / 2^n")},
      {"best_index", num(r.best_index, "argmax of the counting-register distribution")},
      {"p_best", num(r.distribution[r.best_index], "circuit simulation")},
      {"p_best_closed_form", num(phase_probability_closed_form(r.phase, o.bits, r.best_index),
                                 "|sum_k e^{2 pi i k (phi - j/2^n)}|^2 / 4^n")},
      {"phase", num(r.phase, "arg of the eigenvalue / 2 pi")},
      {"oracle_calls", num((1 << o.bits) - 1, "controlled-U applications 2^n - 1")}};
  if (o.distribution) results["distribution"] = num_list(r.distribution, "circuit simulation");
  return make_report("phase", {{"phi", o.phi}, {"bits", o.bits}}, results, o);
}

json cmd_qft(const Options& o) {
  if (o.n < 1 || o.n > 10) throw UsageError("--n must lie in 1..10");
  const Circuit c = qft_circuit(o.n);
  const GateTally t = tally(c);
  const Matrix u = unitary_of(c);
  json results = {
      {"gate_count", num(t.compact(), "n Hadamards + n(n-1)/2 controlled phases + floor(n/2) swaps")},
      {"gate_count_expanded", num(t.expanded(), "swaps counted as three CNOTs")},
      {"hadamards", num(t.single_qubit, "one per wire")},
      {"controlled_phases", num(t.controlled, "n(n-1)/2")},
      {"swaps", num(t.swaps, "floor(n/2)")},
      {"max_deviation", num(max_abs(u - qft_matrix(o.n)), "max |circuit - DFT matrix|")}};
  if (o.emit_matrix) results["matrix"] = tagged(io::matrix_to_json(u), "circuit unitary");
  return make_report("qft", {{"n", o.n}, {"emit_matrix", o.emit_matrix}}, results, o);
}

KrausChannel load_channel(const Options& o) {
  if (!o.channel_file.empty()) return io::channel_from_json(io::read_json_file(o.channel_file), global_tolerance());
  if (o.name.empty()) throw UsageError("--name or --channel-file is required");
  return named_channel(o.name, o.param);
}

json cmd_channel(const Options& o) {
  const KrausChannel ch = load_channel(o);
  json results = {{"channel", tagged(io::to_json(ch), "Kraus elements")},
                  {"completeness_residual", num(ch.completeness_residual(), "max |sum E^dag E - I|")}};
  if (ch.dim() == 2) {
    const BlochAffineMap m = bloch_map(ch);
    json lin = json::array();
    for (const auto& row : m.linear) lin.push_back(std::vector<double>(row.begin(), row.end()));
    results["bloch_map"] = {{"linear", {{"value", lin}, {"formula", "Tr(sigma_i E(sigma_j)) / 2"}}},
                            {"offset", num_list({m.offset.begin(), m.offset.end()}, "Tr(sigma_i E(I)) / 2")}};
  }
  if (!o.apply_file.empty()) {
    const DensityMatrix rho = as_density(load_state(o.apply_file, o.partition));
    if (o.subsystem >= 0) {
      results["output"] = tagged(io::to_json(apply_on(ch, rho, o.subsystem)), "channel on one factor");
    } else if (ch.kind() == ChannelKind::kTracePreserving) {
      results["output"] = tagged(io::to_json(qitk::apply(ch, rho)), "sum E rho E^dag");
    } else {
      const SubNormalizedOutput s = apply_subnormalized(ch, rho);
      results["output"] = tagged(io::matrix_to_json(s.matrix), "sum E rho E^dag, unnormalized");
      results["probability"] = num(s.probability, "trace of the output");
    }
  }
  json inputs = {{"name", o.name}, {"param", o.param}, {"channel_file", o.channel_file},
                 {"apply", o.apply_file}, {"subsystem", o.subsystem}};
  return make_report("channel", inputs, results, o);
}

json cmd_distance(const Options& o) {
  if (o.a_file.empty() || o.b_file.empty()) throw UsageError("--a and --b are required");
  const DensityMatrix a = as_density(load_state(o.a_file, o.partition));
  const DensityMatrix b = as_density(load_state(o.b_file, o.partition));
  json results;
  if (o.measure == "trace") {
    results["trace_distance"] = num(trace_distance(a, b), "half the trace norm of a - b");
  } else if (o.measure == "fidelity") {
    results["fidelity"] = num(fidelity(a, b), "trace norm of sqrt(a) sqrt(b)");
  } else if (o.measure == "relent") {
    const double s = quantum_relative_entropy(a, b);
    results["relative_entropy"] =
        num(s, std::isfinite(s) ? "Tr a log a - Tr a log b" : "infinite: support of a exceeds support of b");
    results["units"] = "bits";
  } else {
    throw UsageError("--measure must be trace, fidelity or relent");
  }
  return make_report("distance", {{"a", o.a_file}, {"b", o.b_file}, {"measure", o.measure}}, results, o);
}

json cmd_entropy(const Options& o) {
  const DensityMatrix rho = as_density(load_state(o.state_file, o.partition));
  json results = {{"entropy", num(von_neumann(rho), "-Tr rho log rho")}, {"units", "bits"}};
  if (rho.dims().size() >= 2) {
    const BipartiteEntropies e = bipartite_entropies(rho, 1);
    for (const std::string& item : o.report_items) {
      if (item == "joint") {
        results["joint"] = num(e.s_ab, "S(A,B)");
      } else if (item == "cond") {
        results["conditional"] = num(e.conditional, "S(A|B) = S(A,B) - S(B)");
      } else if (item == "mutual") {
        results["mutual"] = num(e.mutual, "S(A:B) = S(A) + S(B) - S(A,B)");
      } else if (item == "marginals") {
        results["s_a"] = num(e.s_a, "S(A)");
        results["s_b"] = num(e.s_b, "S(B)");
      } else {
        throw UsageError("unknown --report item " + item);
      }
    }
  }
  return make_report("entropy", {{"state", o.state_file}, {"partition", o.partition}, {"report", o.report_items}},
                     results, o);
}

json cmd_holevo(const Options& o) {
  if (o.ensemble_file.empty()) throw UsageError("--ensemble is required");
  const Ensemble e = io::ensemble_from_json(io::read_json_file(o.ensemble_file), global_tolerance());
  std::vector<double> p;
  for (const auto& [px, rho] : e.entries) p.push_back(px);
  json results = {{"chi", num(holevo_chi(e), "S(sum p rho) - sum p S(rho)")},
                  {"source_entropy", num(shannon(p), "H(X)")},
                  {"dimension_bound", num(std::log2(e.entries.front().second.dim()), "log2 d")},
                  {"units", "bits"}};
  return make_report("holevo", {{"ensemble", o.ensemble_file}}, results, o);
}

json cmd_entangle(const Options& o) {
  const io::AnyState s = load_state(o.state_file, o.partition);
  const DensityMatrix rho = as_density(s);
  if (rho.dims().size() != 2) throw UsageError("entangle needs a bipartition; pass --partition dA,dB");
  const auto* psi = std::get_if<StateVector>(&s);
  const bool two_qubits = rho.dims()[0] == 2 && rho.dims()[1] == 2;
  json results;
  for (const std::string& m : o.measures) {
    if (m == "entropy") {
      results["entropy"] = psi ? num(entanglement_entropy(*psi), "Shannon entropy of the Schmidt weights")
                               : num(NAN, "undefined for mixed input");
    } else if (m == "concurrence") {
      if (psi) {
        results["concurrence"] = num(concurrence_pure(*psi), "sqrt(2(1 - Tr rho_A^2))");
      } else if (two_qubits) {
        results["concurrence"] = num(concurrence_mixed_2q(rho), "max(0, l1 - l2 - l3 - l4) from sqrt(rho) spin flip");
      } else {
        results["concurrence"] = num(NAN, "no closed form beyond two qubits");
      }
    } else if (m == "negativity") {
      results["negativity"] = num(negativity(rho, 1), "(||rho^T_B||_1 - 1) / 2");
    } else if (m == "eof") {
      if (two_qubits) {
        results["eof"] = num(entanglement_of_formation_2q(rho), "binary entropy of (1 + sqrt(1 - c^2)) / 2");
      } else if (psi) {
        results["eof"] = num(entanglement_entropy(*psi), "entanglement entropy of a pure state");
      } else {
        results["eof"] = num(NAN, "no closed form beyond two qubits");
      }
    } else {
      throw UsageError("unknown --measures item " + m);
    }
  }
  results["ppt"] = is_ppt(rho, 1);
  results["units"] = "bits";
  return make_report("entangle", {{"state", o.state_file}, {"partition", o.partition}, {"measures", o.measures}},
                     results, o);
}

DensityMatrix bell_state(const std::string& name) {
  if (name == "phi_plus") return DensityMatrix(bell_phi_plus());
  if (name == "phi_minus") return DensityMatrix(bell_phi_minus());
  if (name == "psi_plus") return DensityMatrix(bell_psi_plus());
  if (name == "psi_minus") return DensityMatrix(bell_psi_minus());
  throw UsageError("--bell must be phi_plus, phi_minus, psi_plus or psi_minus");
}

json settings_json(const ChshSettings& s, const std::string& formula) {
  return {{"alpha", num(s.alpha, formula)},
          {"alpha_prime", num(s.alpha_prime, formula)},
          {"beta", num(s.beta, formula)},
          {"beta_prime", num(s.beta_prime, formula)}};
}

json cmd_chsh(const Options& o) {
  json results;
  json inputs = {{"state", o.state_file}, {"bell", o.bell}, {"optimize", o.optimize},
                 {"angles", o.angles}, {"classical", o.classical}};
  if (o.classical > 0) {
    const ClassicalChshReport r = classical_chsh(o.classical, require_seed(o, "--classical"));
    results["classical_max"] = num(r.max_abs_value, "max |S| over sampled deterministic strategies");
    results["classical_mixture"] = num(r.mixture_value, "|<S>| over the sampled mixture");
    results["classical_bound"] = num(2.0, "local deterministic bound");
  }
  if (!o.state_file.empty() || !o.bell.empty()) {
    const DensityMatrix rho =
        o.bell.empty() ? as_density(load_state(o.state_file, o.partition)) : bell_state(o.bell);
    ChshSettings s = tsirelson_settings();
    std::string source = "angles saturating the bound for psi_minus";
    if (o.angles.size() == 4) {
      s = {o.angles[0], o.angles[1], o.angles[2], o.angles[3]};
      source = "requested";
    } else if (!o.angles.empty()) {
      throw UsageError("--angles takes four values");
    }
    double value = chsh_value(rho, s);
    if (o.optimize) {
      const ChshOptimum opt = optimize_settings(rho, o.seed.value_or(0));
      s = opt.settings;
      value = opt.value;
      source = "grid plus pattern search";
    }
    results["settings"] = settings_json(s, source);
    results["value"] = num(value, "|E(a,b) - E(a,b') + E(a',b) + E(a',b')|");
    results["tsirelson_bound"] = num(kTsirelson, "2 sqrt 2");
    results["violates_classical"] = value > 2.0 + 1e-9;
  } else if (o.classical == 0) {
    throw UsageError("chsh needs --state, --bell or --classical");
  }
  Options effective = o;
  // The optimizer's restarts run on seed 0 unless one is given; report it.
  if (o.optimize && !o.seed) effective.seed = 0;
  return make_report("chsh", inputs, results, effective);
}

json cmd_synth(const Options& o) {
  if (o.unitary_file.empty()) throw UsageError("--unitary is required");
  const Matrix u = io::matrix_from_json(io::read_json_file(o.unitary_file));
  json results;
  if (o.method == "two-level" || o.method == "gray") {
    const std::vector<TwoLevelUnitary> factors = two_level_decompose(u, global_tolerance());
    const int d = static_cast<int>(u.rows());
    results["factor_count"] = num(static_cast<int>(factors.size()), "two-level factors");
    results["factor_bound"] = num(d * (d - 1) / 2.0, "d(d-1)/2");
    if (o.method == "two-level") {
      json fs = json::array();
      for (const TwoLevelUnitary& f : factors) fs.push_back({{"i", f.i}, {"j", f.j}, {"block", io::matrix_to_json(f.block)}});
      results["factors"] = tagged(fs, "U equals the product of the factors in list order");
      results["residual"] = num(max_abs(multiply_factors(factors, d) - u), "max |product - U|");
    } else {
      const int n = log2_exact(static_cast<std::size_t>(d));
      if (n < 1) throw UsageError("gray synthesis needs at least one qubit");
      Circuit c(n);
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) c.append(gray_synthesize(*it, n));
      results["circuit"] = tagged(io::to_json(c), "Gray-code circuit");
      results["gate_count"] = num(c.gate_count(), "gate nodes");
      results["residual"] = num(max_abs(unitary_of(c) - u), "max |circuit - U|");
    }
  } else if (o.method == "ht") {
    if (u.rows() != 2 || u.cols() != 2) throw Error(ErrorKind::kDimensionMismatch, "H/T search needs a 2x2 target");
    if (!is_unitary(u, global_tolerance())) throw Error(ErrorKind::kNotUnitary, "target is not unitary");
    const HtWord w = ht_approximate(u, o.epsilon, o.max_len);
    results["word"] = w.letters;
    results["length"] = num(static_cast<double>(w.letters.size()), "letters");
    results["found"] = w.found;
    results["projective_error"] = num(w.error, "min over phase of the largest singular value of U - e^{i phi} V");
    results["aligned_error"] =
        num(approximation_error(u, std::polar(1.0, w.phase) * w.value), "largest singular value of U - V");
    results["explored"] = num(static_cast<double>(w.explored), "words visited");
  } else {
    throw UsageError("--method must be two-level, gray or ht");
  }
  return make_report("synth", {{"unitary", o.unitary_file}, {"method", o.method}, {"epsilon", o.epsilon},
                               {"max_len", o.max_len}}, results, o);
}

void cmd_sweep(const Options& o, std::ostream& out) {
  if (!(o.step > 0.0) || !(o.to >= o.from) || !std::isfinite(o.from) || !std::isfinite(o.to)) {
    throw UsageError("empty sweep range");
  }
  const long points = static_cast<long>(std::floor((o.to - o.from) / o.step + 1e-9)) + 1;
  auto at = [&](long i) { return o.from + static_cast<double>(i) * o.step; };
  if (o.what == "werner") {
    out << "p,concurrence,negativity,eof\n";
    for (long i = 0; i < points; ++i) {
      const DensityMatrix w = werner_state(at(i));
      const double c = concurrence_mixed_2q(w);
      out << csv_number(at(i)) << ',' << csv_number(c) << ',' << csv_number(negativity(w, 1)) << ','
          << csv_number(eof_from_concurrence(c)) << '\n';
    }
  } else if (o.what == "holevo") {
    out << "gamma,chi\n";
    for (long i = 0; i < points; ++i) {
      const KrausChannel ad = named_channel("amplitude_damping", at(i));
      const Ensemble e = Ensemble::make({{0.5, qitk::apply(ad, DensityMatrix(StateVector::qubits(1, 0)))},
                                         {0.5, qitk::apply(ad, DensityMatrix(StateVector::qubits(1, 1)))}});
      out << csv_number(at(i)) << ',' << csv_number(holevo_chi(e)) << '\n';
    }
  } else if (o.what == "grover") {
    const GroverInstance inst = GroverInstance::make(o.n, o.solutions);
    if (o.from < 0 || o.from != std::floor(o.from) || o.step != std::floor(o.step)) {
      throw UsageError("grover sweeps take integer k ranges");
    }
    const std::vector<double> series = grover_success_series(inst, static_cast<int>(at(points - 1)));
    out << "k,success_circuit,success_closed_form\n";
    for (long i = 0; i < points; ++i) {
      const int k = static_cast<int>(at(i));
      out << k << ',' << csv_number(series[k]) << ',' << csv_number(grover_success(inst, k)) << '\n';
    }
  } else {
    throw UsageError("--what must be werner, holevo or grover");
  }
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"deutsch",  "simon",   "grover", "phase",   "qft",
                                                 "channel",  "distance", "entropy", "holevo", "entangle",
                                                 "chsh",     "synth",   "sweep"};
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() == 1 && (args[0] == "--help" || args[0] == "-h")) {
    out << "usage: qitk <subcommand> [options]\nsubcommands:";
    for (const std::string& name : subcommands()) out << ' ' << name;
    out << "\nrun 'qitk <subcommand> --help' for options\n";
    return kExitOk;
  }
  if (args.empty() || std::find(subcommands().begin(), subcommands().end(), args[0]) == subcommands().end()) {
    write_error(err, "unknown_subcommand", args.empty() ? "no subcommand given" : "unknown subcommand " + args[0]);
    return kExitUnknownCommand;
  }
  const std::string& command = args[0];

  Options o;
  CLI::App app{"qitk " + command};
  app.set_help_flag("-h,--help");
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = app.add_option("--seed", seed, "PRNG seed");

  if (command == "deutsch") {
    app.add_option("--table", o.table, "f(0),f(1)")->delimiter(',')->required();
  } else if (command == "simon") {
    app.add_option("--table", o.table, "f(x) for x = 0..2^n-1")->delimiter(',');
    app.add_option("--table-file", o.table_file, "JSON array or {\"table\": [...]}");
  } else if (command == "grover") {
    app.add_option("--n", o.n)->required();
    app.add_option("--solutions", o.solutions)->delimiter(',')->required();
    app.add_option("--k", o.k);
    app.add_flag("--distribution", o.distribution);
  } else if (command == "phase") {
    app.add_option("--phi", o.phi)->required();
    app.add_option("--bits", o.bits)->required();
    app.add_flag("--distribution", o.distribution);
  } else if (command == "qft") {
    app.add_option("--n", o.n)->required();
    app.add_flag("--emit-matrix", o.emit_matrix);
  } else if (command == "channel") {
    app.add_option("--name", o.name);
    app.add_option("--param", o.param);
    app.add_option("--channel-file", o.channel_file);
    app.add_option("--apply", o.apply_file);
    app.add_option("--subsystem", o.subsystem);
    app.add_option("--partition", o.partition)->delimiter(',');
  } else if (command == "distance") {
    app.add_option("--a", o.a_file)->required();
    app.add_option("--b", o.b_file)->required();
    app.add_option("--measure", o.measure);
    app.add_option("--partition", o.partition)->delimiter(',');
  } else if (command == "entropy") {
    app.add_option("--state", o.state_file)->required();
    app.add_option("--partition", o.partition)->delimiter(',');
    o.report_items = {"joint", "cond", "mutual"};
    app.add_option("--report", o.report_items)->delimiter(',');
  } else if (command == "holevo") {
    app.add_option("--ensemble", o.ensemble_file)->required();
  } else if (command == "entangle") {
    app.add_option("--state", o.state_file)->required();
    app.add_option("--partition", o.partition)->delimiter(',');
    o.measures = {"entropy", "concurrence", "negativity", "eof"};
    app.add_option("--measures", o.measures)->delimiter(',');
  } else if (command == "chsh") {
    app.add_option("--state", o.state_file);
    app.add_option("--bell", o.bell);
    app.add_option("--partition", o.partition)->delimiter(',');
    app.add_flag("--optimize", o.optimize);
    app.add_option("--angles", o.angles)->delimiter(',');
    app.add_option("--classical", o.classical, "number of sampled local strategies");
  } else if (command == "synth") {
    app.add_option("--unitary", o.unitary_file)->required();
    app.add_option("--method", o.method);
    app.add_option("--epsilon", o.epsilon);
    app.add_option("--max-len", o.max_len);
  } else if (command == "sweep") {
    app.add_option("--what", o.what)->required();
    app.add_option("--from", o.from);
    app.add_option("--to", o.to);
    app.add_option("--step", o.step);
    app.add_option("--n", o.n);
    app.add_option("--solutions", o.solutions)->delimiter(',');
  }

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kExitInvalid;
  }
  if (seed_opt->count() > 0) o.seed = seed;

  static const std::map<std::string, std::function<json(const Options&)>> handlers = {
      {"deutsch", cmd_deutsch}, {"simon", cmd_simon},       {"grover", cmd_grover},
      {"phase", cmd_phase},     {"qft", cmd_qft},           {"channel", cmd_channel},
      {"distance", cmd_distance}, {"entropy", cmd_entropy}, {"holevo", cmd_holevo},
      {"entangle", cmd_entangle}, {"chsh", cmd_chsh},       {"synth", cmd_synth}};
  try {
    if (command == "sweep") {
      cmd_sweep(o, out);
    } else {
      out << handlers.at(command)(o).dump(2) << '\n';
    }
  } catch (const Error& e) {
    write_error(err, to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::kParse ? kExitMalformedInput : kExitInvalid;
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what());
    return kExitInvalid;
  } catch (const json::exception& e) {
    write_error(err, "schema", e.what());
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace qitk::cli
