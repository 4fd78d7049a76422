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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qreorder/calibration.hpp"
#include "qreorder/maxcut.hpp"
#include "qreorder/qasm.hpp"

namespace qreorder::testing {

inline std::string fixture_path(const std::string &name) { return std::string(QREORDER_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string &name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Circuit fixture_circuit(const std::string &name) { return parse_qasm(read_fixture(name)); }
inline CalibrationData fixture_calibration(const std::string &name) { return parse_calibration(read_fixture(name)); }
inline MaxCutGraph fixture_graph(const std::string &name) { return parse_graph(read_fixture(name)); }

inline const char *const kQasmCorpus[] = {"bv4.qasm",   "bv5_m1.qasm", "bv5_m2.qasm",      "bv5_fenced.qasm",
                                          "chain3.qasm", "star3.qasm",  "commute_free.qasm"};

}  // namespace qreorder::testing
