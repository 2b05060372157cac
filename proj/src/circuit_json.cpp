// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qudit/circuit_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qudit {
namespace {

using nlohmann::json;

const json &field(const json &obj, const char *key, std::size_t op) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(std::string("missing field '") + key + "'", op);
    }
    return *it;
}

std::size_t as_index(const json &v, const char *key, std::size_t op) {
    if (!v.is_number_unsigned()) {
        throw SchemaError(std::string("field '") + key +
                              "' must be a non-negative integer",
                          op);
    }
    return v.get<std::size_t>();
}

std::size_t index_field(const json &obj, const char *key, std::size_t op) {
    return as_index(field(obj, key, op), key, op);
}

std::size_t index_or(const json &obj, const char *key, std::size_t fallback,
                     std::size_t op) {
    return obj.contains(key) ? index_field(obj, key, op) : fallback;
}

double angle_field(const json &obj, std::size_t op) {
    const json &v = field(obj, "theta", op);
    if (!v.is_number()) {
        throw SchemaError("field 'theta' must be a number", op);
    }
    return v.get<double>();
}

std::vector<std::size_t> index_list(const json &v, const char *key,
                                    std::optional<std::size_t> op) {
    if (!v.is_array()) {
        throw SchemaError(std::string("field '") + key + "' must be an array",
                          op);
    }
    std::vector<std::size_t> out;
    for (const json &item : v) {
        if (!item.is_number_unsigned()) {
            throw SchemaError(std::string("field '") + key +
                                  "' must hold non-negative integers",
                              op);
        }
        out.push_back(item.get<std::size_t>());
    }
    return out;
}

gates::Generator generator(char axis, const json &obj, std::size_t op) {
    switch (axis) {
    case 'X':
        return gates::Generator::x(index_field(obj, "j", op),
                                   index_field(obj, "k", op));
    case 'Y':
        return gates::Generator::y(index_field(obj, "j", op),
                                   index_field(obj, "k", op));
    default:
        return gates::Generator::z(index_field(obj, "j", op));
    }
}

DenseOperator matrix_field(const json &obj, std::size_t op) {
    const json &rows = field(obj, "matrix", op);
    if (!rows.is_array() || rows.empty()) {
        throw SchemaError("field 'matrix' must be a non-empty array of rows", op);
    }
    const std::size_t n = rows.size();
    DenseOperator m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) {
            throw SchemaError("matrix must be square", op);
        }
        for (std::size_t c = 0; c < n; ++c) {
            const json &cell = rows[r][c];
            if (cell.is_number()) {
                m(r, c) = cell.get<double>();
            } else if (cell.is_array() && cell.size() == 2 &&
                       cell[0].is_number() && cell[1].is_number()) {
                m(r, c) = {cell[0].get<double>(), cell[1].get<double>()};
            } else {
                throw SchemaError("matrix entries must be numbers or "
                                  "[re, im] pairs",
                                  op);
            }
        }
    }
    return m;
}

void append_op(Circuit &c, const json &obj, std::size_t i) {
    if (!obj.is_object()) {
        throw SchemaError("op must be an object", i);
    }
    const json &gate_v = field(obj, "gate", i);
    if (!gate_v.is_string()) {
        throw SchemaError("field 'gate' must be a string", i);
    }
    const std::string gate = gate_v.get<std::string>();
    const auto wires = index_list(field(obj, "wires", i), "wires", i);
    if (wires.empty()) {
        throw SchemaError("field 'wires' must not be empty", i);
    }

    auto per_wire = [&](GateSpec base) {
        for (std::size_t w : wires) {
            GateSpec op = base;
            op.wires = {w};
            c.append(std::move(op));
        }
    };

    if (gate == "H") {
        per_wire({.kind = GateKind::Fourier});
    } else if (gate == "X") {
        per_wire({.kind = GateKind::Not, .shift = index_or(obj, "shift", 1, i)});
    } else if (gate == "P") {
        per_wire({.kind = GateKind::Phase});
    } else if (gate == "RX" || gate == "RY" || gate == "RZ") {
        per_wire({.kind = GateKind::Rotation,
                  .gen = generator(gate[1], obj, i),
                  .theta = angle_field(obj, i)});
    } else if (gate == "CNOT") {
        c.append({.kind = GateKind::CNOT,
                  .wires = wires,
                  .shift = index_or(obj, "shift", 1, i)});
    } else if (gate == "SWAP") {
        c.append({.kind = GateKind::SWAP, .wires = wires});
    } else if (gate == "CRX" || gate == "CRY" || gate == "CRZ") {
        c.append({.kind = GateKind::ControlledRotation,
                  .wires = wires,
                  .gen = generator(gate[2], obj, i),
                  .theta = angle_field(obj, i)});
    } else if (gate == "MCX") {
        c.append({.kind = GateKind::MCX,
                  .wires = wires,
                  .shift = index_or(obj, "shift", 1, i)});
    } else if (gate == "U") {
        c.unitary(matrix_field(obj, i), wires);
    } else {
        throw SchemaError("unknown gate '" + gate + "'", i);
    }
}

} // namespace

CircuitFile parse_circuit_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("document must be an object");
    }
    if (!doc.contains("dims")) {
        throw SchemaError("missing field 'dims'");
    }
    Register reg(index_list(doc["dims"], "dims", std::nullopt));

    Circuit circuit(reg);
    if (!doc.contains("ops") || !doc["ops"].is_array()) {
        throw SchemaError("missing array 'ops'");
    }
    const json &ops = doc["ops"];
    for (std::size_t i = 0; i < ops.size(); ++i) {
        try {
            append_op(circuit, ops[i], i);
        } catch (const DomainError &e) {
            throw SchemaError(e.what(), i);
        }
    }

    StateVector initial = StateVector::basis(reg, 0);
    if (doc.contains("initial_state")) {
        if (!doc["initial_state"].is_string()) {
            throw SchemaError("field 'initial_state' must be a label string");
        }
        initial = parse_state(doc["initial_state"].get<std::string>(), reg);
    }

    MeasureSpec measure;
    for (std::size_t w = 0; w < reg.wires(); ++w) {
        measure.wires.push_back(w);
    }
    if (doc.contains("measure")) {
        const json &m = doc["measure"];
        if (!m.is_object()) {
            throw SchemaError("field 'measure' must be an object");
        }
        if (m.contains("wires")) {
            measure.wires = index_list(m["wires"], "measure.wires", std::nullopt);
        }
        if (m.contains("shots")) {
            if (!m["shots"].is_number_unsigned()) {
                throw SchemaError("field 'measure.shots' must be a non-negative "
                                  "integer");
            }
            measure.shots = m["shots"].get<std::uint64_t>();
        }
        if (m.contains("seed")) {
            if (!m["seed"].is_number_unsigned()) {
                throw SchemaError("field 'measure.seed' must be a non-negative "
                                  "integer");
            }
            measure.seed = m["seed"].get<std::uint64_t>();
        }
    }
    return {std::move(circuit), std::move(initial), std::move(measure)};
}

CircuitFile load_circuit_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading '" + path.string() + "'");
    }
    return parse_circuit_json(buf.str());
}

} // namespace qudit
