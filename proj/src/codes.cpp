// Copyright 2026 The qccd-qec Authors
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

#include "qccd/codes.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qccd {

std::string code_kind_name(CodeKind kind) {
    switch (kind) {
        case CodeKind::repetition:
            return "repetition";
        case CodeKind::rotated_surface:
            return "rotated_surface";
        case CodeKind::unrotated_surface:
            return "unrotated_surface";
    }
    throw std::invalid_argument("unknown code kind");
}

CodeKind parse_code_kind(const std::string &text) {
    if (text == "repetition" || text == "rep" || text == "R") {
        return CodeKind::repetition;
    }
    if (text == "rotated_surface" || text == "rotated" || text == "surface" || text == "S") {
        return CodeKind::rotated_surface;
    }
    if (text == "unrotated_surface" || text == "unrotated" || text == "U") {
        return CodeKind::unrotated_surface;
    }
    throw std::invalid_argument("unknown code kind '" + text + "'");
}

std::string qubit_role_name(QubitRole role) {
    switch (role) {
        case QubitRole::data:
            return "data";
        case QubitRole::ancilla_x:
            return "ancilla_x";
        case QubitRole::ancilla_z:
            return "ancilla_z";
    }
    return "?";
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::reset:
            return "R";
        case GateKind::h:
            return "H";
        case GateKind::cx:
            return "CX";
        case GateKind::measure:
            return "M";
    }
    return "?";
}

std::vector<int> CodeLayout::data_qubits() const {
    std::vector<int> out;
    for (const auto &q : qubits) {
        if (q.role == QubitRole::data) {
            out.push_back(q.id);
        }
    }
    return out;
}

std::vector<int> CodeLayout::ancilla_qubits() const {
    std::vector<int> out;
    for (const auto &q : qubits) {
        if (q.role != QubitRole::data) {
            out.push_back(q.id);
        }
    }
    return out;
}

namespace {

// Picks a row or column of data qubits that commutes with every X check.
std::vector<int> find_logical_z(const CodeLayout &layout) {
    std::map<int, std::vector<int>> rows;
    std::map<int, std::vector<int>> cols;
    for (const auto &q : layout.qubits) {
        if (q.role == QubitRole::data) {
            rows[q.pos.y].push_back(q.id);
            cols[q.pos.x].push_back(q.id);
        }
    }
    auto commutes = [&](const std::vector<int> &support) {
        std::set<int> s(support.begin(), support.end());
        for (const auto &cell : layout.cells) {
            if (layout.qubits[cell.ancilla].role != QubitRole::ancilla_x) {
                continue;
            }
            int overlap = 0;
            for (int d : cell.data) {
                overlap += (int)s.count(d);
            }
            if (overlap % 2) {
                return false;
            }
        }
        return true;
    };
    for (auto *lines : {&rows, &cols}) {
        for (const auto &[key, support] : *lines) {
            if ((int)support.size() == layout.distance && commutes(support)) {
                return support;
            }
        }
    }
    throw std::logic_error("no logical Z operator found");
}

CodeLayout build_repetition(int d) {
    CodeLayout layout;
    layout.kind = CodeKind::repetition;
    layout.distance = d;
    for (int i = 0; i < d; i++) {
        layout.qubits.push_back({i, QubitRole::data, {2 * i, 0}});
    }
    for (int i = 0; i + 1 < d; i++) {
        int id = d + i;
        layout.qubits.push_back({id, QubitRole::ancilla_z, {2 * i + 1, 0}});
        layout.cells.push_back({id, {i, i + 1}, {0, 1}});
    }
    layout.logical_z = {0};
    return layout;
}

CodeLayout build_rotated(int d, const CnotOrder &order) {
    CodeLayout layout;
    layout.kind = CodeKind::rotated_surface;
    layout.distance = d;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            layout.qubits.push_back({i * d + j, QubitRole::data, {2 * j + 1, 2 * i + 1}});
        }
    }
    auto data_at = [&](int i, int j) {
        return (i < 0 || j < 0 || i >= d || j >= d) ? -1 : i * d + j;
    };
    for (int i = 0; i <= d; i++) {
        for (int j = 0; j <= d; j++) {
            bool is_x = (i + j) % 2 == 0;
            bool top_bottom = i == 0 || i == d;
            bool left_right = j == 0 || j == d;
            if (top_bottom && left_right) {
                continue;
            }
            if (top_bottom && !is_x) {
                continue;
            }
            if (left_right && is_x) {
                continue;
            }
            int id = (int)layout.qubits.size();
            QubitRole role = is_x ? QubitRole::ancilla_x : QubitRole::ancilla_z;
            layout.qubits.push_back({id, role, {2 * j, 2 * i}});
            std::array<int, 4> around{
                data_at(i - 1, j - 1), data_at(i - 1, j), data_at(i, j - 1), data_at(i, j)};
            const auto &visit = is_x ? order.x_check : order.z_check;
            Cell cell{id, {}, {}};
            for (int k = 0; k < 4; k++) {
                int q = around[visit[k]];
                if (q >= 0) {
                    cell.data.push_back(q);
                    cell.step.push_back(k);
                }
            }
            layout.cells.push_back(std::move(cell));
        }
    }
    layout.logical_z = find_logical_z(layout);
    return layout;
}

CodeLayout build_unrotated(int d) {
    CodeLayout layout;
    layout.kind = CodeKind::unrotated_surface;
    layout.distance = d;
    int n = 2 * d - 1;
    std::map<std::pair<int, int>, int> id_at;
    for (int y = 0; y < n; y++) {
        for (int x = 0; x < n; x++) {
            if ((x + y) % 2 == 0) {
                int id = (int)layout.qubits.size();
                id_at[{x, y}] = id;
                layout.qubits.push_back({id, QubitRole::data, {x, y}});
            }
        }
    }
    // N, E, W, S for both check types keeps every X/Z pair commuting.
    const std::array<std::pair<int, int>, 4> visit{{{0, -1}, {1, 0}, {-1, 0}, {0, 1}}};
    for (int y = 0; y < n; y++) {
        for (int x = 0; x < n; x++) {
            if ((x + y) % 2 == 0) {
                continue;
            }
            int id = (int)layout.qubits.size();
            QubitRole role = x % 2 == 1 ? QubitRole::ancilla_x : QubitRole::ancilla_z;
            layout.qubits.push_back({id, role, {x, y}});
            Cell cell{id, {}, {}};
            for (int k = 0; k < 4; k++) {
                auto it = id_at.find({x + visit[k].first, y + visit[k].second});
                if (it != id_at.end()) {
                    cell.data.push_back(it->second);
                    cell.step.push_back(k);
                }
            }
            layout.cells.push_back(std::move(cell));
        }
    }
    layout.logical_z = find_logical_z(layout);
    return layout;
}

}  // namespace

CodeLayout build_layout(CodeKind kind, int distance, const CnotOrder &order) {
    if (distance < 2) {
        throw std::invalid_argument("code distance must be at least 2, got " + std::to_string(distance));
    }
    switch (kind) {
        case CodeKind::repetition:
            return build_repetition(distance);
        case CodeKind::rotated_surface:
            return build_rotated(distance, order);
        case CodeKind::unrotated_surface:
            return build_unrotated(distance);
    }
    throw std::invalid_argument("unknown code kind");
}

namespace {

void append_round(const CodeLayout &layout, int round, std::vector<Gate> &out) {
    std::vector<int> anc = layout.ancilla_qubits();
    for (int a : anc) {
        out.push_back({GateKind::reset, a, -1, round});
    }
    for (int a : anc) {
        if (layout.qubits[a].role == QubitRole::ancilla_x) {
            out.push_back({GateKind::h, a, -1, round});
        }
    }
    for (int step = 0; step < 4; step++) {
        for (const auto &cell : layout.cells) {
            bool is_x = layout.qubits[cell.ancilla].role == QubitRole::ancilla_x;
            for (size_t k = 0; k < cell.data.size(); k++) {
                if (cell.step[k] != step) {
                    continue;
                }
                if (is_x) {
                    out.push_back({GateKind::cx, cell.ancilla, cell.data[k], round});
                } else {
                    out.push_back({GateKind::cx, cell.data[k], cell.ancilla, round});
                }
            }
        }
    }
    for (int a : anc) {
        if (layout.qubits[a].role == QubitRole::ancilla_x) {
            out.push_back({GateKind::h, a, -1, round});
        }
    }
    for (int a : anc) {
        out.push_back({GateKind::measure, a, -1, round});
    }
}

}  // namespace

LogicalCircuit generate_round(const CodeLayout &layout) {
    LogicalCircuit c;
    c.num_qubits = (int)layout.num_qubits();
    c.rounds = 1;
    c.round_starts.push_back(0);
    append_round(layout, 0, c.gates);
    c.round_starts.push_back(c.gates.size());
    return c;
}

LogicalCircuit generate_memory_experiment(const CodeLayout &layout, int rounds) {
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be at least 1, got " + std::to_string(rounds));
    }
    LogicalCircuit c;
    c.num_qubits = (int)layout.num_qubits();
    c.rounds = rounds;
    std::vector<int> data = layout.data_qubits();
    for (int q : data) {
        c.gates.push_back({GateKind::reset, q, -1, -1});
    }
    for (int r = 0; r < rounds; r++) {
        c.round_starts.push_back(c.gates.size());
        append_round(layout, r, c.gates);
    }
    c.round_starts.push_back(c.gates.size());
    for (int q : data) {
        c.gates.push_back({GateKind::measure, q, -1, -1});
    }
    return c;
}

double InteractionGraph::weight(int a, int b) const {
    auto it = edges.find({std::min(a, b), std::max(a, b)});
    return it == edges.end() ? 0.0 : it->second;
}

std::vector<int> InteractionGraph::neighbours(int q) const {
    std::vector<int> out;
    for (const auto &[key, w] : edges) {
        if (key.first == q) {
            out.push_back(key.second);
        } else if (key.second == q) {
            out.push_back(key.first);
        }
    }
    return out;
}

InteractionGraph interaction_graph(const LogicalCircuit &circuit) {
    InteractionGraph g;
    g.num_nodes = circuit.num_qubits;
    double total = (double)circuit.gates.size();
    for (size_t i = 0; i < circuit.gates.size(); i++) {
        const auto &gate = circuit.gates[i];
        if (gate.kind != GateKind::cx) {
            continue;
        }
        auto key = std::make_pair(std::min(gate.q0, gate.q1), std::max(gate.q0, gate.q1));
        g.edges.emplace(key, total - (double)i);
    }
    return g;
}

nlohmann::json layout_to_json(const CodeLayout &layout) {
    nlohmann::json j;
    j["kind"] = code_kind_name(layout.kind);
    j["distance"] = layout.distance;
    j["qubits"] = nlohmann::json::array();
    for (const auto &q : layout.qubits) {
        j["qubits"].push_back({{"id", q.id}, {"role", qubit_role_name(q.role)}, {"x", q.pos.x}, {"y", q.pos.y}});
    }
    j["cells"] = nlohmann::json::array();
    for (const auto &c : layout.cells) {
        j["cells"].push_back({{"ancilla", c.ancilla}, {"data", c.data}, {"step", c.step}});
    }
    j["logical_z"] = layout.logical_z;
    return j;
}

nlohmann::json circuit_to_json(const LogicalCircuit &circuit) {
    nlohmann::json j;
    j["num_qubits"] = circuit.num_qubits;
    j["rounds"] = circuit.rounds;
    j["round_starts"] = circuit.round_starts;
    j["gates"] = nlohmann::json::array();
    for (const auto &g : circuit.gates) {
        nlohmann::json targets = nlohmann::json::array({g.q0});
        if (g.q1 >= 0) {
            targets.push_back(g.q1);
        }
        j["gates"].push_back({{"op", gate_kind_name(g.kind)}, {"targets", targets}, {"round", g.round}});
    }
    return j;
}

}  // namespace qccd
