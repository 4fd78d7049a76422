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

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qreorder/error.hpp"

namespace qreorder {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Weighted undirected graph for Max-Cut. Node i is read from bit i of an
/// outcome bitstring (the rightmost character is bit 0).
struct MaxCutGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;

  void validate() const {
    if (n < 2) throw InputError("max-cut graph needs at least 2 nodes");
    std::set<std::pair<int, int>> seen;
    for (const auto &e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
      if (e.u == e.v) throw InputError("self loop on node " + std::to_string(e.u));
      if (!(e.weight >= 0.0)) throw InputError("negative edge weight");
      if (!seen.insert(std::minmax(e.u, e.v)).second)
        throw InputError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
};

/// Bit `index` of a little-endian bitstring.
inline bool bit_at(std::string_view bits, std::size_t index) { return bits[bits.size() - 1 - index] == '1'; }

inline double maxcut_cost(std::string_view bits, const MaxCutGraph &g) {
  if (bits.size() != static_cast<std::size_t>(g.n))
    throw InputError("bitstring width " + std::to_string(bits.size()) + " != graph size " + std::to_string(g.n));
  double total = 0.0;
  for (const auto &e : g.edges) {
    if (bit_at(bits, static_cast<std::size_t>(e.u)) != bit_at(bits, static_cast<std::size_t>(e.v))) total += e.weight;
  }
  return total;
}

inline double maxcut_cost(std::uint64_t assignment, const MaxCutGraph &g) {
  double total = 0.0;
  for (const auto &e : g.edges) {
    if (((assignment >> e.u) & 1U) != ((assignment >> e.v) & 1U)) total += e.weight;
  }
  return total;
}

/// Brute force over all 2^n assignments.
inline double max_cost(const MaxCutGraph &g) {
  if (g.n > 20) throw InputError("max_cost brute force is limited to 20 nodes");
  double best = 0.0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << g.n); ++a) best = std::max(best, maxcut_cost(a, g));
  return best;
}

inline MaxCutGraph parse_graph(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError(std::string("graph is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw SchemaError("graph: missing integer 'n'");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw SchemaError("graph: missing 'edges' array");
  MaxCutGraph g;
  g.n = doc["n"].get<int>();
  for (const auto &e : doc["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e["u"].is_number_integer() ||
        !e["v"].is_number_integer())
      throw SchemaError("graph: edge needs integer 'u' and 'v'");
    double w = 1.0;
    if (e.contains("weight")) {
      if (!e["weight"].is_number()) throw SchemaError("graph: 'weight' must be a number");
      w = e["weight"].get<double>();
    }
    g.edges.push_back({e["u"].get<int>(), e["v"].get<int>(), w});
  }
  try {
    g.validate();
  } catch (const InputError &err) {
    throw SchemaError(std::string("graph: ") + err.what());
  }
  return g;
}

inline nlohmann::ordered_json graph_to_json(const MaxCutGraph &g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n;
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto &e : g.edges) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  return doc;
}

enum class DegreeMode {
  Regular,  // every node has exactly `degree` neighbours
  Average,  // n*degree/2 edges drawn uniformly
};

struct RandomGraphOptions {
  int n = 15;
  int degree = 5;
  DegreeMode mode = DegreeMode::Average;
  double min_weight = 0.1;
  double max_weight = 1.0;
  std::uint64_t seed = 1;
};

/// Seeded random weighted graph. Regular mode uses the pairing model with
/// restarts; it throws if n*degree is odd or degree >= n.
inline MaxCutGraph random_graph(const RandomGraphOptions &opt) {
  if (opt.n < 2 || opt.degree < 1 || opt.degree >= opt.n) throw InputError("random graph: need 1 <= degree < n");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> weight(opt.min_weight, opt.max_weight);
  std::set<std::pair<int, int>> chosen;
  if (opt.mode == DegreeMode::Regular) {
    if ((opt.n * opt.degree) % 2 != 0) throw InputError("random regular graph: n*degree must be even");
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw InputError("random regular graph: pairing failed");
      std::vector<int> stubs;
      for (int v = 0; v < opt.n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(opt.degree), v);
      std::shuffle(stubs.begin(), stubs.end(), rng);
      chosen.clear();
      bool ok = true;
      for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
        const int a = stubs[i], b = stubs[i + 1];
        ok = a != b && chosen.insert(std::minmax(a, b)).second;
      }
      if (ok) break;
    }
  } else {
    const std::size_t target = static_cast<std::size_t>(opt.n) * static_cast<std::size_t>(opt.degree) / 2;
    std::uniform_int_distribution<int> node(0, opt.n - 1);
    while (chosen.size() < target) {
      const int a = node(rng), b = node(rng);
      if (a != b) chosen.insert(std::minmax(a, b));
    }
  }
  MaxCutGraph g{opt.n, {}};
  for (const auto &[a, b] : chosen) g.edges.push_back({a, b, weight(rng)});
  return g;
}

}  // namespace qreorder
