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

#include "qccd/translate.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qccd {

std::string native_kind_name(NativeKind kind) {
    switch (kind) {
        case NativeKind::ms:
            return "MS";
        case NativeKind::rx:
            return "RX";
        case NativeKind::ry:
            return "RY";
        case NativeKind::rz:
            return "RZ";
        case NativeKind::measure:
            return "Measure";
        case NativeKind::reset:
            return "Reset";
    }
    return "?";
}

NativeCircuit decompose(const LogicalCircuit &circuit) {
    constexpr double pi = std::numbers::pi;
    NativeCircuit out;
    out.num_qubits = circuit.num_qubits;
    for (size_t i = 0; i < circuit.gates.size(); i++) {
        const Gate &g = circuit.gates[i];
        int src = (int)i;
        switch (g.kind) {
            case GateKind::reset:
                out.ops.push_back({NativeKind::reset, g.q0, -1, 0, src});
                break;
            case GateKind::measure:
                out.ops.push_back({NativeKind::measure, g.q0, -1, 0, src});
                break;
            case GateKind::h:
                // RZ(pi) * RY(-pi/2) = -i H.
                out.ops.push_back({NativeKind::ry, g.q0, -1, -pi / 2, src});
                out.ops.push_back({NativeKind::rz, g.q0, -1, pi, src});
                break;
            case GateKind::cx: {
                int c = g.q0;
                int t = g.q1;
                if (c == t || t < 0) {
                    throw std::invalid_argument("CX needs two distinct qubits");
                }
                out.ops.push_back({NativeKind::ry, c, -1, pi / 2, src});
                out.ops.push_back({NativeKind::ms, c, t, pi / 2, src});
                out.ops.push_back({NativeKind::rx, c, -1, -pi / 2, src});
                out.ops.push_back({NativeKind::rx, t, -1, -pi / 2, src});
                out.ops.push_back({NativeKind::ry, c, -1, -pi / 2, src});
                break;
            }
            default:
                throw std::invalid_argument("unsupported gate kind");
        }
    }
    return out;
}

namespace {

double normalise_angle(double a) {
    constexpr double two_pi = 2 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a <= -std::numbers::pi) {
        a += two_pi;
    } else if (a > std::numbers::pi) {
        a -= two_pi;
    }
    return a;
}

}  // namespace

NativeCircuit peephole_merge(const NativeCircuit &native) {
    constexpr double eps = 1e-12;
    std::vector<NativeOp> ops;
    std::vector<bool> alive;
    // Per-qubit stack of live op indices in `ops`.
    std::vector<std::vector<size_t>> history(native.num_qubits);
    for (const NativeOp &op : native.ops) {
        if (op.is_rotation()) {
            auto &h = history[op.q0];
            if (!h.empty() && ops[h.back()].kind == op.kind) {
                NativeOp &prev = ops[h.back()];
                prev.angle = normalise_angle(prev.angle + op.angle);
                if (std::abs(prev.angle) < eps) {
                    alive[h.back()] = false;
                    h.pop_back();
                }
                continue;
            }
            double a = normalise_angle(op.angle);
            if (std::abs(a) < eps) {
                continue;
            }
            NativeOp copy = op;
            copy.angle = a;
            h.push_back(ops.size());
            ops.push_back(copy);
            alive.push_back(true);
            continue;
        }
        history[op.q0].push_back(ops.size());
        if (op.q1 >= 0) {
            history[op.q1].push_back(ops.size());
        }
        ops.push_back(op);
        alive.push_back(true);
    }
    NativeCircuit out;
    out.num_qubits = native.num_qubits;
    for (size_t i = 0; i < ops.size(); i++) {
        if (alive[i]) {
            out.ops.push_back(ops[i]);
        }
    }
    return out;
}

}  // namespace qccd
