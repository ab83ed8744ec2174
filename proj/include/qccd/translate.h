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

#ifndef QCCD_TRANSLATE_H
#define QCCD_TRANSLATE_H

#include <string>
#include <vector>

#include "qccd/codes.h"

namespace qccd {

enum class NativeKind { ms, rx, ry, rz, measure, reset };
std::string native_kind_name(NativeKind kind);

/// Rotation convention: R_P(theta) = exp(-i theta P / 2).
/// MS(theta) = exp(-i theta X(x)X / 2).
struct NativeOp {
    NativeKind kind = NativeKind::rx;
    int q0 = 0;
    int q1 = -1;
    double angle = 0;
    /// Index of the logical gate this op was lowered from.
    int source_gate = -1;

    bool is_rotation() const {
        return kind == NativeKind::rx || kind == NativeKind::ry || kind == NativeKind::rz;
    }
};

struct NativeCircuit {
    int num_qubits = 0;
    std::vector<NativeOp> ops;
};

NativeCircuit decompose(const LogicalCircuit &circuit);

/// Merges adjacent same-axis rotations on each qubit and drops identities.
/// Angles are normalised into (-pi, pi]; the dropped 2*pi multiples only
/// change the global phase.
NativeCircuit peephole_merge(const NativeCircuit &native);

}  // namespace qccd

#endif
