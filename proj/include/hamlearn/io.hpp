// Copyright 2026 The hamlearn Authors
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

#pragma once

#include <string>

#include "json.hpp"

#include "hamlearn/distances.hpp"
#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/oracle.hpp"

namespace hamlearn::io {

/// {"n": int, "terms": [{"pauli": "XIZY", "coeff": float}, ...]}; terms in
/// letter order. Identity terms and duplicate strings are rejected.
nlohmann::json to_json(const SparseHamiltonian& h);
SparseHamiltonian hamiltonian_from_json(const nlohmann::json& j);

SparseHamiltonian read_hamiltonian(const std::string& path);
void write_hamiltonian(const std::string& path, const SparseHamiltonian& h);

/// {"experiments", "total_time", "queries", "min_resolution" (null before
/// any timed query), "ancilla"}.
nlohmann::json to_json(const ResourceLedger& ledger);

/// {"value", "argmax", "grid_error", "kind"}.
nlohmann::json to_json(const DistanceResult& d);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

}  // namespace hamlearn::io
