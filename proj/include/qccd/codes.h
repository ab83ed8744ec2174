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

#ifndef QCCD_CODES_H
#define QCCD_CODES_H

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qccd {

enum class CodeKind { repetition, rotated_surface, unrotated_surface };
enum class QubitRole { data, ancilla_x, ancilla_z };

std::string code_kind_name(CodeKind kind);
CodeKind parse_code_kind(const std::string &text);
std::string qubit_role_name(QubitRole role);

struct Coord {
    int x = 0;
    int y = 0;
    bool operator==(const Coord &other) const = default;
};

struct CodeQubit {
    int id = 0;
    QubitRole role = QubitRole::data;
    Coord pos;
};

/// One stabilizer: the ancilla at its centre and the data qubits it checks.
/// `data[k]` is touched during CNOT layer `step[k]` (0..3).
struct Cell {
    int ancilla = 0;
    std::vector<int> data;
    std::vector<int> step;
};

/// Visiting order of the four diagonal neighbours, as indices into
/// {NW, NE, SW, SE}. Used for rotated layouts only.
struct CnotOrder {
    std::array<int, 4> z_check{0, 1, 2, 3};
    std::array<int, 4> x_check{0, 2, 1, 3};
};

struct CodeLayout {
    CodeKind kind = CodeKind::rotated_surface;
    int distance = 0;
    std::vector<CodeQubit> qubits;
    std::vector<Cell> cells;
    /// Data qubits whose product of Z's is the logical Z operator.
    std::vector<int> logical_z;

    size_t num_qubits() const {
        return qubits.size();
    }
    bool is_ancilla(int q) const {
        return qubits[q].role != QubitRole::data;
    }
    std::vector<int> data_qubits() const;
    std::vector<int> ancilla_qubits() const;
};

CodeLayout build_layout(CodeKind kind, int distance, const CnotOrder &order = {});

enum class GateKind { reset, h, cx, measure };
std::string gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::reset;
    int q0 = 0;
    /// Target of a CX; -1 otherwise.
    int q1 = -1;
    /// Syndrome round the gate belongs to; -1 for the initial reset and final readout.
    int round = -1;
};

struct LogicalCircuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    /// round_starts[r] is the index of the first gate of round r. A final
    /// entry marks the end of the last round.
    std::vector<size_t> round_starts;
    int rounds = 0;
};

LogicalCircuit generate_round(const CodeLayout &layout);
LogicalCircuit generate_memory_experiment(const CodeLayout &layout, int rounds);

struct InteractionGraph {
    int num_nodes = 0;
    /// Keyed by (min qubit, max qubit).
    std::map<std::pair<int, int>, double> edges;
    double weight(int a, int b) const;
    std::vector<int> neighbours(int q) const;
};

InteractionGraph interaction_graph(const LogicalCircuit &circuit);

nlohmann::json layout_to_json(const CodeLayout &layout);
nlohmann::json circuit_to_json(const LogicalCircuit &circuit);

}  // namespace qccd

#endif
