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

#ifndef QCCD_ROUTE_H
#define QCCD_ROUTE_H

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qccd/device.h"
#include "qccd/place.h"
#include "qccd/translate.h"

namespace qccd {

enum class OpKind {
    ms,
    rx,
    ry,
    rz,
    measure,
    reset,
    split,
    merge,
    shuttle,
    junction_entry,
    junction_exit,
    gate_swap,
};

std::string op_kind_name(OpKind kind);
OpKind parse_op_kind(const std::string &text);
OpKind op_kind_of(NativeKind kind);

/// Split, merge, shuttle, junction entry/exit and gate swaps.
bool is_movement(OpKind kind);
/// Movement that changes which component an ion sits in (no gate swaps).
bool is_transport(OpKind kind);
bool is_two_ion(OpKind kind);

struct StreamOp {
    int id = 0;
    OpKind kind = OpKind::rx;
    int ion0 = -1;
    int ion1 = -1;
    double angle = 0;
    /// Trap executing a gate or gate swap.
    int trap = -1;
    /// Transport source and destination components. A shuttle has from == to.
    int from = -1;
    int to = -1;
    /// Index into the native circuit, -1 for movement.
    int native = -1;
    int round = -1;
    int pass = 0;
    std::vector<int> deps;

    /// Components whose exclusivity this op needs.
    std::vector<int> components() const;
};

struct OpStream {
    DeviceSpec device;
    int num_ions = 0;
    /// initial_chains[c] lists the ions in trap c from left to right.
    std::vector<std::vector<int>> initial_chains;
    std::vector<StreamOp> ops;
    int passes = 0;
};

class RoutingViolation : public std::runtime_error {
   public:
    RoutingViolation(int op_id, const std::string &what)
        : std::runtime_error("op " + std::to_string(op_id) + ": " + what), op_id(op_id) {
    }
    int op_id;
};

class RoutingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Ion positions on a device. `apply` enforces every transport and
/// co-location rule and throws RoutingViolation on the first breach.
class RoutingState {
   public:
    RoutingState(const QccdDevice &device, const std::vector<std::vector<int>> &chains, int num_ions);

    int location(int ion) const {
        return location_[ion];
    }
    const std::vector<int> &chain(int trap) const {
        return chains_[trap];
    }
    int occupancy(int component) const {
        return occupancy_[component];
    }
    void apply(const StreamOp &op);
    /// Throws RoutingViolation(op_id) unless every ion rests in a trap
    /// holding at most capacity - 1 ions.
    void check_pass_boundary(int op_id) const;

   private:
    const QccdDevice &device_;
    std::vector<int> location_;
    std::vector<std::vector<int>> chains_;
    std::vector<int> occupancy_;
    std::vector<bool> shuttled_;
};

/// Minimum-hop path from `src` to `dst` through components accepted by
/// `allowed` (src itself is always allowed). Among equal-length paths the
/// lexicographically smallest id sequence wins. Empty if none exists.
std::vector<int> shortest_path(const QccdDevice &device, int src, int dst, const std::function<bool(int)> &allowed);

std::vector<std::vector<int>> chains_from_mapping(const Mapping &mapping, const QccdDevice &device);

struct RouteInput {
    const NativeCircuit &native;
    const QccdDevice &device;
    std::vector<std::vector<int>> initial_chains;
    /// mobile[q] is true for ions allowed to travel (ancillas).
    std::vector<bool> mobile;
    /// round of each native op (-1 outside syndrome rounds); may be empty.
    std::vector<int> native_round;
};

OpStream route_circuit(const RouteInput &input);

/// Fills `deps` with per-ion, per-trap, per-segment and per-junction
/// program order edges. Every edge points to an earlier op.
void build_dependencies(OpStream &stream, const QccdDevice &device);

struct MovementCounts {
    int n_movement_ops = 0;
    int n_gate_swaps = 0;
};
MovementCounts count_movement(const OpStream &stream);

/// Replays a stream and reports the first invariant breach, or "" if clean.
std::string check_stream(const OpStream &stream, const QccdDevice &device);

nlohmann::json stream_header_json(const OpStream &stream);
nlohmann::json stream_op_json(const StreamOp &op);
StreamOp stream_op_from_json(const nlohmann::json &j);

}  // namespace qccd

#endif
