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


#pragma once

// Device calibration: per-qubit readout and single-qubit gate errors plus
// per-edge cx errors. JSON layout:
//
//   {"name": "...",
//    "qubits": [{"id": 0, "readout_error": 0.02,
//                "gate_errors": {"h": 1e-3, "x": 1e-3, "sx": 1e-3, "rz": 0}}],
//    "edges":  [{"qubits": [0, 1], "cx_error": 0.01}]}
//
// cx errors are symmetric in control/target.

#include <algorithm>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "qreorder/circuit.hpp"
#include "qreorder/error.hpp"

namespace qreorder {

struct QubitCalibration {
  double readout_error = 0.0;
  double h_error = 0.0;
  double x_error = 0.0;
  double sx_error = 0.0;
};

using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct CalibrationData {
  std::string name;
  std::map<int, QubitCalibration> qubits;
  std::map<Edge, double> edges;  // keys normalized by make_edge

  bool has_qubit(int q) const { return qubits.count(q) != 0; }
  bool coupled(int a, int b) const { return edges.count(make_edge(a, b)) != 0; }

  const QubitCalibration &qubit(int q) const {
    auto it = qubits.find(q);
    if (it == qubits.end()) throw CoverageError("calibration has no entry for qubit " + std::to_string(q));
    return it->second;
  }

  double cx_error(int a, int b) const {
    auto it = edges.find(make_edge(a, b));
    if (it == edges.end())
      throw CoverageError("cx(" + std::to_string(a) + "," + std::to_string(b) + ") is not on the coupling graph");
    return it->second;
  }
};

namespace calibration_detail {

inline double rate(const nlohmann::json &obj, const char *key, const std::string &where) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing '" + key + "'");
  const auto &v = obj.at(key);
  if (!v.is_number()) throw SchemaError(where + ": '" + key + "' must be a number");
  const double r = v.get<double>();
  if (!(r >= 0.0 && r <= 1.0)) throw SchemaError(where + ": '" + key + "' = " + v.dump() + " is outside [0,1]");
  return r;
}

inline int index(const nlohmann::json &v, const std::string &where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(where + ": expected a qubit index");
  return v.get<int>();
}

}  // namespace calibration_detail

inline CalibrationData parse_calibration(const std::string &text) {
  using calibration_detail::index;
  using calibration_detail::rate;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError(std::string("calibration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("calibration must be a JSON object");
  CalibrationData cal;
  if (!doc.contains("name") || !doc["name"].is_string()) throw SchemaError("calibration: missing 'name'");
  cal.name = doc["name"].get<std::string>();

  if (!doc.contains("qubits") || !doc["qubits"].is_array()) throw SchemaError("calibration: missing 'qubits' array");
  for (const auto &entry : doc["qubits"]) {
    if (!entry.is_object() || !entry.contains("id")) throw SchemaError("qubits[]: missing 'id'");
    const int id = index(entry["id"], "qubits[]");
    const std::string where = "qubit " + std::to_string(id);
    if (cal.qubits.count(id)) throw SchemaError(where + ": duplicate entry");
    QubitCalibration qc;
    qc.readout_error = rate(entry, "readout_error", where);
    if (!entry.contains("gate_errors")) throw SchemaError(where + ": missing 'gate_errors'");
    const auto &ge = entry["gate_errors"];
    qc.h_error = rate(ge, "h", where);
    qc.x_error = rate(ge, "x", where);
    qc.sx_error = rate(ge, "sx", where);
    if (ge.contains("rz") && rate(ge, "rz", where) != 0.0) throw SchemaError(where + ": rz error must be 0");
    cal.qubits.emplace(id, qc);
  }

  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw SchemaError("calibration: 'edges' must be an array");
    for (const auto &entry : doc["edges"]) {
      if (!entry.is_object() || !entry.contains("qubits") || !entry["qubits"].is_array() ||
          entry["qubits"].size() != 2)
        throw SchemaError("edges[]: 'qubits' must be a pair");
      const int a = index(entry["qubits"][0], "edges[]");
      const int b = index(entry["qubits"][1], "edges[]");
      const std::string where = "edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (a == b) throw SchemaError(where + ": self loop");
      if (!cal.has_qubit(a) || !cal.has_qubit(b)) throw SchemaError(where + ": undeclared qubit");
      if (cal.edges.count(make_edge(a, b))) throw SchemaError(where + ": duplicate entry");
      cal.edges.emplace(make_edge(a, b), rate(entry, "cx_error", where));
    }
  }
  return cal;
}

inline CalibrationData load_calibration(std::istream &in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_calibration(text);
}

inline nlohmann::ordered_json calibration_to_json(const CalibrationData &cal) {
  nlohmann::ordered_json doc;
  doc["name"] = cal.name;
  doc["qubits"] = nlohmann::ordered_json::array();
  for (const auto &[id, q] : cal.qubits) {
    nlohmann::ordered_json e;
    e["id"] = id;
    e["readout_error"] = q.readout_error;
    e["gate_errors"] = {{"h", q.h_error}, {"x", q.x_error}, {"sx", q.sx_error}, {"rz", 0.0}};
    doc["qubits"].push_back(e);
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto &[edge, err] : cal.edges) {
    doc["edges"].push_back({{"qubits", {edge.first, edge.second}}, {"cx_error", err}});
  }
  return doc;
}

/// Throws CoverageError unless every qubit and every cx pair of `c` is known.
inline void check_coverage(const Circuit &c, const CalibrationData &cal) {
  for (int q = 0; q < c.num_qubits(); ++q) {
    if (!cal.has_qubit(q)) throw CoverageError("calibration has no entry for qubit " + std::to_string(q));
  }
  for (const auto &g : c.gates()) {
    if (g.kind == GateKind::CX) cal.cx_error(g.qubits[0], g.qubits[1]);
  }
}

/// Calibrated error of one gate. rz, barrier and measure report 0 (readout
/// error is accounted separately).
inline double gate_error(const CalibrationData &cal, const Gate &g) {
  switch (g.kind) {
    case GateKind::H: return cal.qubit(g.qubits[0]).h_error;
    case GateKind::X: return cal.qubit(g.qubits[0]).x_error;
    case GateKind::SX: return cal.qubit(g.qubits[0]).sx_error;
    case GateKind::CX: return cal.cx_error(g.qubits[0], g.qubits[1]);
    default: return 0.0;
  }
}

/// Line-topology calibration with uniform rates; handy for tests and demos.
inline CalibrationData uniform_line_calibration(int num_qubits, double single_error, double cx_error,
                                                double readout_error, std::string name = "uniform-line") {
  CalibrationData cal;
  cal.name = std::move(name);
  for (int q = 0; q < num_qubits; ++q) cal.qubits[q] = {readout_error, single_error, single_error, single_error};
  for (int q = 0; q + 1 < num_qubits; ++q) cal.edges[make_edge(q, q + 1)] = cx_error;
  return cal;
}

}  // namespace qreorder
