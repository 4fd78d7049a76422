// Copyright 2026 The qreorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// qreorder: score, reschedule, simulate and generate circuits from the shell.
// Reports are JSON on stdout with a fixed key order. Exit codes: 0 success,
// 2 input error, 3 internal invariant violation.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qreorder/qreorder.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qreorder;

constexpr const char *kBitOrder = "little-endian: the rightmost character is clbit 0";

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

/// 64-bit FNV-1a over every input document, each followed by a 0 separator.
std::string digest(std::initializer_list<std::string_view> parts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  for (auto part : parts) {
    for (char ch : part) mix(static_cast<unsigned char>(ch));
    mix(0);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string sidecar_path(const std::string &qasm_path) { return qasm_path + ".blocks.json"; }

/// Sidecar document: {"blocks": {"<gate index>": block_id, ...}}.
std::string blocks_to_json(const Circuit &c) {
  ordered_json doc;
  doc["blocks"] = ordered_json::object();
  for (const auto &g : c.gates()) {
    if (g.block_id) doc["blocks"][std::to_string(g.id)] = *g.block_id;
  }
  return doc.dump(2) + "\n";
}

Circuit apply_blocks(const Circuit &c, const std::string &text, const std::string &where) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError(where + ": not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_object())
    throw SchemaError(where + ": missing 'blocks' object");
  std::vector<Gate> gates(c.gates().begin(), c.gates().end());
  for (const auto &[key, value] : doc["blocks"].items()) {
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception &) {
      throw SchemaError(where + ": gate index '" + key + "' is not a number");
    }
    if (index >= gates.size()) throw SchemaError(where + ": gate index " + key + " out of range");
    if (!value.is_number_integer()) throw SchemaError(where + ": block id for gate " + key + " must be an integer");
    gates[index] = gates[index].tagged(value.get<int>());
  }
  return c.with_gates(std::move(gates));
}

struct Inputs {
  std::string qasm_text;
  std::string calibration_text;
  Circuit circuit;
  CalibrationData calibration;
};

Inputs load(const std::string &qasm_path, const std::string &cal_path, const std::string &blocks_path) {
  Inputs in;
  in.qasm_text = read_file(qasm_path);
  in.calibration_text = read_file(cal_path);
  in.circuit = parse_qasm(in.qasm_text);
  in.calibration = parse_calibration(in.calibration_text);
  std::string sidecar = blocks_path;
  if (sidecar.empty() && std::filesystem::exists(sidecar_path(qasm_path))) sidecar = sidecar_path(qasm_path);
  if (!sidecar.empty()) in.circuit = apply_blocks(in.circuit, read_file(sidecar), sidecar);
  check_coverage(in.circuit, in.calibration);
  return in;
}

ordered_json metrics_json(const MetricReport &m) {
  ordered_json j;
  j["esp"] = m.esp;
  j["wesp"] = m.wesp;
  j["depth"] = m.depth;
  j["erroneous_gates"] = m.erroneous_gates;
  j["measured_qubits"] = m.measured_qubits;
  j["min_error"] = m.min_error;
  j["readout_factor"] = m.readout_factor;
  bool all_zero = true;
  for (const auto &g : m.per_gate) all_zero = all_zero && g.lambda == 0.0;
  j["lambda_zero"] = all_zero;
  j["per_gate"] = ordered_json::array();
  for (const auto &g : m.per_gate) {
    j["per_gate"].push_back({{"id", g.id},
                             {"gate", std::string(gate_name(g.kind))},
                             {"qubits", g.qubits},
                             {"layer", g.layer},
                             {"error", g.error},
                             {"reach", g.reach},
                             {"weight", g.weight},
                             {"lambda", g.lambda}});
  }
  return j;
}

ordered_json header(const std::string &command, const std::string &input_digest) {
  ordered_json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["bit_order"] = kBitOrder;
  return j;
}

void print(const ordered_json &report) { std::cout << report.dump(2) << "\n"; }

struct MetricsArgs {
  std::string qasm, calibration, blocks;
};

void cmd_metrics(const MetricsArgs &a) {
  const Inputs in = load(a.qasm, a.calibration, a.blocks);
  ordered_json r = header("metrics", digest({in.qasm_text, in.calibration_text}));
  r["metrics"] = metrics_json(wesp(in.circuit, in.calibration));
  print(r);
}

struct RescheduleArgs {
  std::string qasm, calibration, blocks, output;
  std::string level = "elementary";
  std::size_t sweeps = 1;
  std::optional<std::size_t> exhaustive;
  std::string block_rule = "complement";
  bool verify = false;
  bool no_verify = false;
  bool no_timing = false;
};

std::vector<std::string> gate_multiset(const Circuit &c) {
  std::vector<std::string> out;
  for (const auto &g : c.gates()) out.push_back(describe(g));
  std::sort(out.begin(), out.end());
  return out;
}

void cmd_reschedule(const RescheduleArgs &a) {
  const Inputs in = load(a.qasm, a.calibration, a.blocks);
  if (a.exhaustive && a.level != "elementary") throw InputError("--exhaustive is only available with --level elementary");
  ZZOptions zz{a.sweeps, a.block_rule == "product" ? BlockErrorRule::LiteralProduct : BlockErrorRule::SuccessComplement};
  RescheduleOptions opt{a.sweeps};

  RescheduleResult res;
  if (a.exhaustive) {
    res = exhaustive_reschedule(in.circuit, in.calibration, *a.exhaustive);
  } else if (a.level == "elementary") {
    res = reschedule_elementary(in.circuit, in.calibration, opt);
  } else if (a.level == "zz") {
    res = reschedule_zz(in.circuit, in.calibration, zz);
  } else {
    res = reschedule_combined(in.circuit, in.calibration, zz, opt);
  }

  if (res.circuit.depth() != in.circuit.depth())
    throw InvariantViolation("rescheduled depth " + std::to_string(res.circuit.depth()) + " differs from input depth " +
                             std::to_string(in.circuit.depth()));
  if (gate_multiset(res.circuit) != gate_multiset(in.circuit))
    throw InvariantViolation("rescheduled circuit changed the gate multiset");
  const bool verify = !a.no_verify && (a.verify || in.circuit.num_qubits() < 7);
  if (verify) {
    const double dist = unitary_distance(strip_measurements(in.circuit), strip_measurements(res.circuit),
                                         std::max(6, in.circuit.num_qubits()));
    if (dist > 1e-10)
      throw InvariantViolation("rescheduled circuit is not unitarily equivalent (deviation " + std::to_string(dist) + ")");
  }

  const std::string emitted = emit_qasm(res.circuit);
  if (!a.output.empty()) {
    write_file(a.output, emitted);
    bool tagged = false;
    for (const auto &g : res.circuit.gates()) tagged = tagged || g.block_id.has_value();
    if (tagged) write_file(sidecar_path(a.output), blocks_to_json(res.circuit));
  }

  ordered_json r = header("reschedule", digest({in.qasm_text, in.calibration_text}));
  r["level"] = a.exhaustive ? "exhaustive" : a.level;
  r["sweeps"] = a.sweeps;
  r["R"] = res.swaps;
  r["depth"] = res.circuit.depth();
  r["wesp_before"] = res.wesp_before;
  r["wesp_after"] = res.wesp_after;
  if (a.exhaustive) r["schedules_enumerated"] = res.schedules_enumerated;
  r["stages"] = ordered_json::array();
  for (const auto &s : res.stages) {
    r["stages"].push_back(
        {{"level", s.level}, {"R", s.swaps}, {"wesp_before", s.wesp_before}, {"wesp_after", s.wesp_after}});
  }
  r["verified"] = verify;
  r["before"] = metrics_json(wesp(in.circuit, in.calibration));
  r["after"] = metrics_json(wesp(res.circuit, in.calibration));
  if (!a.output.empty()) r["output"] = a.output;
  if (!a.no_timing) r["elapsed_ms"] = res.elapsed_ms;
  print(r);
}

struct SimulateArgs {
  std::string qasm, calibration, blocks, expected, graph, compare;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  int threads = 1;
};

double binomial_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

struct Score {
  ordered_json json;
  double value = 0.0;
};

Score score(const Circuit &c, const CalibrationData &cal, const SimulateArgs &a,
            const std::optional<MaxCutGraph> &graph) {
  SimConfig cfg;
  cfg.shots = a.shots;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  const Histogram h = sample_noisy(c, cal, cfg);
  Score s;
  s.json["histogram"] = ordered_json::object();
  for (const auto &[bits, n] : h) s.json["histogram"][bits] = n;
  if (graph) {
    if (c.num_clbits() != graph->n)
      throw InputError("graph has " + std::to_string(graph->n) + " nodes but the circuit has " +
                       std::to_string(c.num_clbits()) + " classical bits");
    s.value = approximation_ratio(h, *graph);
    const double ideal = expected_cut(ideal_distribution(c), *graph) / max_cost(*graph);
    s.json["ar"] = s.value;
    s.json["ar_ideal"] = ideal;
    s.json["arg_percent"] = approximation_ratio_gap(ideal, s.value);
  } else {
    s.value = pst(h, a.expected);
    s.json["pst"] = s.value;
    s.json["pst_sigma"] = binomial_sigma(s.value, static_cast<double>(a.shots));
  }
  return s;
}

void cmd_simulate(const SimulateArgs &a) {
  if (a.expected.empty() == a.graph.empty()) throw InputError("give exactly one of --expected or --graph");
  const Inputs in = load(a.qasm, a.calibration, a.blocks);
  std::optional<MaxCutGraph> graph;
  std::string graph_text;
  if (!a.graph.empty()) {
    graph_text = read_file(a.graph);
    graph = parse_graph(graph_text);
  } else {
    if (a.expected.size() != static_cast<std::size_t>(in.circuit.num_clbits()) ||
        a.expected.find_first_not_of("01") != std::string::npos)
      throw InputError("--expected must be a " + std::to_string(in.circuit.num_clbits()) + "-character bitstring");
  }
  ordered_json r = header("simulate", digest({in.qasm_text, in.calibration_text, graph_text, a.expected}));
  r["shots"] = a.shots;
  r["seed"] = a.seed;
  if (!a.expected.empty()) r["expected"] = a.expected;
  const Score mine = score(in.circuit, in.calibration, a, graph);
  for (const auto &[k, v] : mine.json.items()) r[k] = v;
  if (!a.compare.empty()) {
    const std::string base_text = read_file(a.compare);
    const Circuit base = parse_qasm(base_text);
    check_coverage(base, in.calibration);
    const Score other = score(base, in.calibration, a, graph);
    ordered_json cmp;
    cmp["qasm"] = a.compare;
    cmp["input_digest"] = digest({base_text});
    for (const auto &[k, v] : other.json.items()) {
      if (k != "histogram") cmp[k] = v;
    }
    cmp["delta"] = mine.value - other.value;
    if (graph) cmp["arg_percent_vs_base"] = approximation_ratio_gap(other.value, mine.value);
    r["compare"] = cmp;
  }
  print(r);
}

struct QaoaArgs {
  std::string graph, output, calibration;
  std::vector<double> gammas, betas;
  int p = 1;
};

void cmd_qaoa(const QaoaArgs &a) {
  const std::string graph_text = read_file(a.graph);
  QaoaSpec spec;
  spec.graph = parse_graph(graph_text);
  spec.p = a.p;
  auto expand = [&](std::vector<double> v, const char *name) {
    if (v.size() == 1 && a.p > 1) v.assign(static_cast<std::size_t>(a.p), v.front());
    if (v.size() != static_cast<std::size_t>(std::max(a.p, 0)))
      throw InputError(std::string("--") + name + " needs 1 or p values");
    return v;
  };
  spec.gammas = expand(a.gammas, "gamma");
  spec.betas = expand(a.betas, "beta");
  std::optional<std::set<std::pair<int, int>>> coupling;
  if (!a.calibration.empty()) {
    const CalibrationData cal = parse_calibration(read_file(a.calibration));
    coupling.emplace();
    for (const auto &[edge, rate] : cal.edges) coupling->insert(edge);
  }
  const Circuit c = build_qaoa(spec, coupling);
  write_file(a.output, emit_qasm(c));
  write_file(sidecar_path(a.output), blocks_to_json(c));
  ordered_json r = header("qaoa", digest({graph_text}));
  r["qubits"] = c.num_qubits();
  r["gates"] = c.size();
  r["blocks"] = extract_blocks(c).size();
  r["depth"] = c.depth();
  r["output"] = a.output;
  r["blocks_sidecar"] = sidecar_path(a.output);
  print(r);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qreorder: noise-aware gate rescheduling"};
  app.require_subcommand(1);

  MetricsArgs m;
  auto *metrics = app.add_subcommand("metrics", "Report ESP, WESP and the per-gate table");
  metrics->add_option("--qasm", m.qasm, "OpenQASM 2.0 circuit")->required();
  metrics->add_option("--calibration", m.calibration, "Calibration JSON")->required();
  metrics->add_option("--blocks", m.blocks, "Block-tag sidecar (default: <qasm>.blocks.json if present)");

  RescheduleArgs rs;
  auto *resched = app.add_subcommand("reschedule", "Depth-preserving noise-aware reordering");
  resched->add_option("--qasm", rs.qasm, "OpenQASM 2.0 circuit")->required();
  resched->add_option("--calibration", rs.calibration, "Calibration JSON")->required();
  resched->add_option("--blocks", rs.blocks, "Block-tag sidecar (default: <qasm>.blocks.json if present)");
  resched->add_option("--level", rs.level, "elementary, zz or both")
      ->check(CLI::IsMember({"elementary", "zz", "both"}));
  resched->add_option("--sweeps", rs.sweeps, "Greedy sweeps over the layers")->check(CLI::PositiveNumber);
  resched->add_option("--exhaustive", rs.exhaustive, "Enumerate all schedules up to this many");
  resched->add_option("--block-rule", rs.block_rule, "ZZ block error: complement or product")
      ->check(CLI::IsMember({"complement", "product"}));
  resched->add_option("-o,--output", rs.output, "Write the rescheduled circuit here");
  resched->add_flag("--verify", rs.verify, "Force the unitary-equivalence self-check");
  resched->add_flag("--no-verify", rs.no_verify, "Skip the self-check (on by default below 7 qubits)");
  resched->add_flag("--no-timing", rs.no_timing, "Omit elapsed time so reports diff cleanly");

  SimulateArgs sim;
  auto *simulate = app.add_subcommand("simulate", "Noisy sampling with PST or approximation ratio");
  simulate->add_option("--qasm", sim.qasm, "OpenQASM 2.0 circuit")->required();
  simulate->add_option("--calibration", sim.calibration, "Calibration JSON")->required();
  simulate->add_option("--blocks", sim.blocks, "Block-tag sidecar");
  simulate->add_option("--shots", sim.shots, "Number of shots")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "Random seed");
  simulate->add_option("--threads", sim.threads, "Worker threads (results do not depend on this)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--expected", sim.expected, "Expected outcome bitstring for PST");
  simulate->add_option("--graph", sim.graph, "Max-Cut graph JSON for approximation ratio");
  simulate->add_option("--compare", sim.compare, "Baseline circuit to score with the same seed");

  QaoaArgs q;
  auto *qaoa = app.add_subcommand("qaoa", "Generate a Max-Cut QAOA circuit with block tags");
  qaoa->add_option("--graph", q.graph, "Max-Cut graph JSON")->required();
  qaoa->add_option("--gamma", q.gammas, "Cost angle(s), one or p values")->required()->delimiter(',');
  qaoa->add_option("--beta", q.betas, "Mixer angle(s), one or p values")->required()->delimiter(',');
  qaoa->add_option("--p", q.p, "Number of rounds");
  qaoa->add_option("-o,--output", q.output, "Output QASM path; the sidecar goes to <output>.blocks.json")
      ->required();
  qaoa->add_option("--calibration", q.calibration, "Reject graph edges missing from this coupling map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*metrics) cmd_metrics(m);
    if (*resched) cmd_reschedule(rs);
    if (*simulate) cmd_simulate(sim);
    if (*qaoa) cmd_qaoa(q);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
