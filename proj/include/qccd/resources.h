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


#ifndef QCCD_RESOURCES_H
#define QCCD_RESOURCES_H

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "qccd/device.h"

namespace qccd {

struct ResourceEstimate {
    int64_t n_linear_zones = 0;
    int64_t n_junction_zones = 0;
    int64_t n_dynamic_electrodes = 0;
    int64_t n_shim_electrodes = 0;
    int64_t n_electrodes = 0;
    /// Fractional under WISE, where shim DACs are shared 100 ways.
    double n_dacs = 0;
    int64_t data_rate_mbit_s = 0;
    int64_t power_mw = 0;
};

// Per-zone electrode counts and per-DAC link costs.
constexpr int64_t kDynamicPerLinearZone = 10;
constexpr int64_t kDynamicPerJunctionZone = 20;
constexpr int64_t kShimPerZone = 10;
constexpr int64_t kMbitPerDac = 50;
constexpr int64_t kMilliwattPerDac = 30;
constexpr int64_t kWiseFixedDacs = 100;
constexpr int64_t kWiseShimsPerDac = 100;

ResourceEstimate estimate(const DeviceCounts &counts, Wiring wiring);

nlohmann::json resources_to_json(const ResourceEstimate &e);

struct SweepPoint {
    int distance = 0;
    int capacity = 0;
    double logical_error_rate = 1;
    int64_t n_electrodes = 0;
};

/// Cheapest sweep point whose logical error rate meets `target`, or nullopt
/// if none does.
std::optional<SweepPoint> electrodes_for_target(const std::vector<SweepPoint> &rows, double target);

}  // namespace qccd

#endif
