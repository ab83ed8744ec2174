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


#ifndef QCCD_CONFIG_H
#define QCCD_CONFIG_H

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qccd/codes.h"
#include "qccd/device.h"
#include "qccd/noise.h"
#include "qccd/schedule.h"

namespace qccd {

struct CompileConfig {
    CodeKind code = CodeKind::rotated_surface;
    int distance = 3;
    int capacity = 2;
    Topology topology = Topology::grid;
    Wiring wiring = Wiring::standard;
    double improvement = 1;
    /// Syndrome rounds; 0 means one per unit of distance.
    int rounds = 0;
    bool cooling = false;
    /// Echoed into reports. Compilation itself has no random choices.
    uint64_t seed = 0;
    TimingTable timing;
    NoiseParams noise;

    int effective_rounds() const {
        return rounds > 0 ? rounds : distance;
    }
    /// Throws std::invalid_argument on the first bad field.
    void validate() const;
};

nlohmann::json config_to_json(const CompileConfig &c);
/// Missing keys keep their defaults.
CompileConfig config_from_json(const nlohmann::json &j);

/// "CODE,d,capacity,TOPO", e.g. "S,3,2,G". Code letters R/S/U, topology
/// letters G/L/W/C. Other fields keep the values in `base`.
CompileConfig parse_config_tuple(const std::string &text, const CompileConfig &base = {});
std::string format_config_tuple(const CompileConfig &c);

std::string code_letter(CodeKind kind);
std::string topology_letter(Topology t);

}  // namespace qccd

#endif
