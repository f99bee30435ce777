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

#include "hamlearn/io.hpp"

#include <charconv>
#include <fstream>
#include <set>

#include "hamlearn/errors.hpp"

namespace hamlearn::io {

nlohmann::json to_json(const SparseHamiltonian& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : h.terms()) terms.push_back({{"pauli", p.to_letters()}, {"coeff", c}});
  return {{"n", h.num_qubits()}, {"terms", terms}};
}

SparseHamiltonian hamiltonian_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw UsageError("Hamiltonian JSON needs fields \"n\" and \"terms\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw UsageError("\"n\" must be a positive integer");
  if (!j["terms"].is_array()) throw UsageError("\"terms\" must be an array");
  const int n = j["n"].get<int>();
  SparseHamiltonian h(n);
  std::set<std::string> seen;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("pauli") || !term.contains("coeff") || !term["pauli"].is_string() ||
        !term["coeff"].is_number()) {
      throw UsageError("each term needs a string \"pauli\" and a numeric \"coeff\"");
    }
    const std::string letters = term["pauli"].get<std::string>();
    if (static_cast<int>(letters.size()) != n) throw UsageError("term \"" + letters + "\" has the wrong length");
    if (!seen.insert(letters).second) throw UsageError("duplicate term \"" + letters + "\"");
    const PauliString p = PauliString::from_letters(letters);
    if (p.is_identity()) throw UsageError("identity terms are not allowed");
    h.set_term(p, term["coeff"].get<double>());
  }
  return h;
}

SparseHamiltonian read_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
  return hamiltonian_from_json(j);
}

void write_hamiltonian(const std::string& path, const SparseHamiltonian& h) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << to_json(h).dump(2) << '\n';
}

nlohmann::json to_json(const ResourceLedger& ledger) {
  nlohmann::json j = {{"experiments", ledger.experiments},
                      {"total_time", ledger.total_evolution_time},
                      {"queries", ledger.queries},
                      {"min_resolution", nullptr},
                      {"ancilla", ledger.ancilla_qubits}};
  if (ledger.has_resolution()) j["min_resolution"] = ledger.min_time_resolution;
  return j;
}

nlohmann::json to_json(const DistanceResult& d) {
  return {{"value", d.value}, {"argmax", d.argmax}, {"grid_error", d.grid_error}, {"kind", to_string(d.kind)}};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace hamlearn::io
