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


#include "qccd/resources.h"

namespace qccd {

ResourceEstimate estimate(const DeviceCounts &counts, Wiring wiring) {
    ResourceEstimate e;
    e.n_linear_zones = (int64_t)counts.n_traps * counts.capacity;
    e.n_junction_zones = counts.n_junctions;
    e.n_dynamic_electrodes = kDynamicPerLinearZone * e.n_linear_zones + kDynamicPerJunctionZone * e.n_junction_zones;
    e.n_shim_electrodes = kShimPerZone * (e.n_linear_zones + e.n_junction_zones);
    e.n_electrodes = e.n_dynamic_electrodes + e.n_shim_electrodes;
    if (wiring == Wiring::standard) {
        e.n_dacs = (double)e.n_electrodes;
        e.data_rate_mbit_s = kMbitPerDac * e.n_electrodes;
        e.power_mw = kMilliwattPerDac * e.n_electrodes;
    } else if (e.n_electrodes > 0) {
        e.n_dacs = kWiseFixedDacs + (double)e.n_shim_electrodes / kWiseShimsPerDac;
        // Shim counts are multiples of 10, so both products divide exactly.
        e.data_rate_mbit_s = kMbitPerDac * kWiseFixedDacs + kMbitPerDac * e.n_shim_electrodes / kWiseShimsPerDac;
        e.power_mw = kMilliwattPerDac * kWiseFixedDacs + kMilliwattPerDac * e.n_shim_electrodes / kWiseShimsPerDac;
    }
    return e;
}

nlohmann::json resources_to_json(const ResourceEstimate &e) {
    return {{"n_linear_zones", e.n_linear_zones},
            {"n_junction_zones", e.n_junction_zones},
            {"n_dynamic_electrodes", e.n_dynamic_electrodes},
            {"n_shim_electrodes", e.n_shim_electrodes},
            {"n_electrodes", e.n_electrodes},
            {"n_dacs", e.n_dacs},
            {"data_rate_mbit_s", e.data_rate_mbit_s},
            {"power_mw", e.power_mw}};
}

std::optional<SweepPoint> electrodes_for_target(const std::vector<SweepPoint> &rows, double target) {
    std::optional<SweepPoint> best;
    for (const auto &r : rows) {
        if (r.logical_error_rate > target) {
            continue;
        }
        if (!best || r.n_electrodes < best->n_electrodes ||
            (r.n_electrodes == best->n_electrodes && r.distance < best->distance)) {
            best = r;
        }
    }
    return best;
}

}  // namespace qccd
