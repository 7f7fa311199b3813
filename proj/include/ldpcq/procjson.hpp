// Copyright 2026 The ldpcq Authors
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

#ifndef LDPCQ_PROCJSON_HPP
#define LDPCQ_PROCJSON_HPP

#include <string>

#include "ldpcq/process.hpp"

namespace ldpcq {

/// Versioned process interchange document, e.g.
/// {"version":1,"realization":"defect","n_in":3,"n_out":3,
///  "wires":[{"id":0,"roles":["input","output"]},...],
///  "ancillas":[{"wire":3,"basis":"X","state":"plus","leg_hadamard":true}],
///  "gates":[{"g":"CNOT","c":2,"t":0},{"g":"H","w":0}],
///  "measurements":[{"wire":2,"basis":"X","outcome":1}],
///  "outputs":[0,1,3]}
/// Emission is deterministic (fixed key order) so documents can serve as
/// goldens.
std::string process_to_json(const QuantumProcess& p);

/// Parses and validates; throws parse_error / std::invalid_argument on
/// malformed documents or violated wire invariants.
QuantumProcess process_from_json(const std::string& text);

}  // namespace ldpcq

#endif
