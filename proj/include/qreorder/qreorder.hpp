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

#include "qreorder/calibration.hpp"
#include "qreorder/circuit.hpp"
#include "qreorder/commutation.hpp"
#include "qreorder/dependency_graph.hpp"
#include "qreorder/error.hpp"
#include "qreorder/gate.hpp"
#include "qreorder/maxcut.hpp"
#include "qreorder/metrics.hpp"
#include "qreorder/pauli.hpp"
#include "qreorder/qaoa.hpp"
#include "qreorder/qasm.hpp"
#include "qreorder/rescheduler.hpp"
#include "qreorder/schedule.hpp"
#include "qreorder/simulator.hpp"
#include "qreorder/unitary.hpp"
#include "qreorder/zz.hpp"
