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

#ifndef QCCD_DEVICE_H
#define QCCD_DEVICE_H

#include <string>
#include <vector>

#include "json.hpp"
#include "qccd/codes.h"

namespace qccd {

enum class Topology { grid, linear, switch_star, single_chain };
enum class Wiring { standard, wise };

std::string topology_name(Topology t);
Topology parse_topology(const std::string &text);
std::string wiring_name(Wiring w);
Wiring parse_wiring(const std::string &text);

enum class ComponentKind { trap, junction, segment };

/// Which end of a trap's ion chain a segment attaches to.
enum class TrapEnd { left, right };

struct Component {
    int id = 0;
    ComponentKind kind = ComponentKind::trap;
    /// Ions held. Segments always hold at most one.
    int capacity = 1;
    double x = 0;
    double y = 0;
    // Segment only.
    int a = -1;
    int b = -1;
    TrapEnd end_a = TrapEnd::right;
    TrapEnd end_b = TrapEnd::left;
    // Trap and junction only: attached segment ids, ascending.
    std::vector<int> segments;
};

struct DeviceCounts {
    int n_traps = 0;
    int n_junctions = 0;
    int n_segments = 0;
    int capacity = 0;
};

/// Declarative description; `build_device` turns it into a graph.
struct DeviceSpec {
    Topology topology = Topology::grid;
    int rows = 0;
    int cols = 0;
    /// Used by linear, switch and single-chain devices.
    int n_traps = 0;
    int capacity = 2;
    Wiring wiring = Wiring::standard;
};

nlohmann::json device_spec_to_json(const DeviceSpec &spec);
DeviceSpec device_spec_from_json(const nlohmann::json &j);

class QccdDevice {
   public:
    QccdDevice() = default;
    /// Takes ownership of a hand-built component list. Ids must equal indices.
    QccdDevice(DeviceSpec spec, std::vector<Component> components);

    const DeviceSpec &spec() const {
        return spec_;
    }
    Topology topology() const {
        return spec_.topology;
    }
    Wiring wiring() const {
        return spec_.wiring;
    }
    const std::vector<Component> &components() const {
        return components_;
    }
    const Component &at(int id) const {
        return components_[id];
    }
    size_t size() const {
        return components_.size();
    }
    const std::vector<int> &traps() const {
        return traps_;
    }
    const std::vector<int> &junctions() const {
        return junctions_;
    }
    bool is_trap(int id) const {
        return components_[id].kind == ComponentKind::trap;
    }
    bool is_segment(int id) const {
        return components_[id].kind == ComponentKind::segment;
    }
    /// Components adjacent in the component graph (segments link the rest).
    std::vector<int> neighbours(int id) const;
    /// End of `trap` that `segment` attaches to.
    TrapEnd end_of(int trap, int segment) const;
    /// The component on the far side of `segment` from `from`.
    int other_end(int segment, int from) const;
    DeviceCounts counts() const;
    bool connected() const;
    /// Throws std::invalid_argument describing the first broken invariant.
    void validate() const;
    nlohmann::json to_json() const;

   private:
    void index();

    DeviceSpec spec_;
    std::vector<Component> components_;
    std::vector<int> traps_;
    std::vector<int> junctions_;
};

QccdDevice build_device(const DeviceSpec &spec);

/// Sizes a device for `layout`. Grid dimensions come from the placement
/// module so that the cluster geometry embeds without collisions.
QccdDevice device_for_code(const CodeLayout &layout, int capacity, Topology topology,
                           Wiring wiring = Wiring::standard);

}  // namespace qccd

#endif
