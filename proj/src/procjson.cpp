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

#include "ldpcq/procjson.hpp"

#include <json.hpp>

#include "ldpcq/errors.hpp"

namespace ldpcq {

namespace {

using json = nlohmann::ordered_json;

Realization realization_from_string(const std::string& s) {
  if (s == "defect") return Realization::Defect;
  if (s == "minimal_coupling") return Realization::MinimalCoupling;
  if (s == "tensor_merge") return Realization::TensorMerge;
  if (s == "check_merge") return Realization::CheckMerge;
  throw std::invalid_argument("unknown realization '" + s + "'");
}

PauliBasis basis_from_string(const std::string& s) {
  if (s == "X") return PauliBasis::X;
  if (s == "Z") return PauliBasis::Z;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

StateLabel state_from_string(const std::string& s) {
  if (s == "plus") return StateLabel::Plus;
  if (s == "minus") return StateLabel::Minus;
  if (s == "zero") return StateLabel::Zero;
  if (s == "one") return StateLabel::One;
  throw std::invalid_argument("unknown ancilla state '" + s + "'");
}

}  // namespace

std::string process_to_json(const QuantumProcess& p) {
  json doc;
  doc["version"] = 1;
  doc["realization"] = to_string(p.realization);
  doc["n_in"] = p.n_in;
  doc["n_out"] = p.n_out;
  json wires = json::array();
  for (std::size_t w = 0; w < p.total_wires; ++w) {
    json roles = json::array();
    if (p.wires[w].input) roles.push_back("input");
    if (p.wires[w].ancilla) roles.push_back("ancilla");
    if (p.wires[w].measured) roles.push_back("measured");
    if (p.wires[w].output) roles.push_back("output");
    wires.push_back(json{{"id", w}, {"roles", roles}});
  }
  doc["wires"] = wires;
  json ancillas = json::array();
  for (const auto& a : p.ancillas)
    ancillas.push_back(json{{"wire", a.wire},
                            {"basis", to_string(a.basis)},
                            {"state", to_string(a.state)},
                            {"leg_hadamard", a.leg_hadamard}});
  doc["ancillas"] = ancillas;
  json gates = json::array();
  for (const auto& g : p.gates) {
    if (g.kind == Gate::Kind::H)
      gates.push_back(json{{"g", "H"}, {"w", g.a}});
    else
      gates.push_back(json{{"g", "CNOT"}, {"c", g.a}, {"t", g.b}});
  }
  doc["gates"] = gates;
  json meas = json::array();
  for (const auto& m : p.measurements)
    meas.push_back(json{{"wire", m.wire}, {"basis", to_string(m.basis)}, {"outcome", m.outcome}});
  doc["measurements"] = meas;
  doc["outputs"] = p.outputs;
  return doc.dump(2) + "\n";
}

QuantumProcess process_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1)
      throw std::invalid_argument("unsupported process document version");
    QuantumProcess p;
    p.realization = realization_from_string(doc.at("realization").get<std::string>());
    p.n_in = doc.at("n_in").get<std::size_t>();
    p.n_out = doc.at("n_out").get<std::size_t>();
    const auto& wires = doc.at("wires");
    p.total_wires = wires.size();
    p.wires.assign(p.total_wires, {});
    for (const auto& w : wires) {
      const std::size_t id = w.at("id").get<std::size_t>();
      if (id >= p.total_wires) throw std::invalid_argument("wire id out of range");
      for (const auto& role : w.at("roles")) {
        const std::string r = role.get<std::string>();
        if (r == "input")
          p.wires[id].input = true;
        else if (r == "ancilla")
          p.wires[id].ancilla = true;
        else if (r == "measured")
          p.wires[id].measured = true;
        else if (r == "output")
          p.wires[id].output = true;
        else
          throw std::invalid_argument("unknown wire role '" + r + "'");
      }
    }
    for (const auto& a : doc.at("ancillas"))
      p.ancillas.push_back({a.at("wire").get<uint32_t>(),
                            basis_from_string(a.at("basis").get<std::string>()),
                            state_from_string(a.at("state").get<std::string>()),
                            a.at("leg_hadamard").get<bool>()});
    for (const auto& g : doc.at("gates")) {
      const std::string kind = g.at("g").get<std::string>();
      if (kind == "H")
        p.gates.push_back(Gate::h(g.at("w").get<uint32_t>()));
      else if (kind == "CNOT")
        p.gates.push_back(Gate::cnot(g.at("c").get<uint32_t>(), g.at("t").get<uint32_t>()));
      else
        throw std::invalid_argument("unknown gate '" + kind + "'");
    }
    for (const auto& m : doc.at("measurements"))
      p.measurements.push_back({m.at("wire").get<uint32_t>(),
                                basis_from_string(m.at("basis").get<std::string>()),
                                m.at("outcome").get<int>()});
    for (const auto& o : doc.at("outputs")) p.outputs.push_back(o.get<uint32_t>());
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed process document: ") + e.what());
  }
}

}  // namespace ldpcq
