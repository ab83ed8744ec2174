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

#ifndef QCCD_NOISE_H
#define QCCD_NOISE_H

#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"
#include "qccd/route.h"
#include "qccd/schedule.h"

namespace qccd {

struct NoiseParams {
    /// Dephasing time in microseconds.
    double t2_us = 2.2e6;
    double p_reset = 5e-3;
    double p_measure = 1e-3;
    /// Background heating rate, per second.
    double heating_rate = 12.5;
    /// Laser-instability scale A0, with A(N) = A0 ln(N) / N, per gate type.
    /// Defaults give 1e-3 (two-qubit) and 1e-4 (one-qubit) at improvement 5
    /// in a fresh two-ion chain.
    double thermal_scale_2q = 9e-3 / std::numbers::ln2;
    double thermal_scale_1q = 8.75e-4 / std::numbers::ln2;
    /// Gate improvement factor f >= 1; divides every error probability.
    double improvement = 1;
    bool cooling = false;
    double cooled_2q = 2e-3;
    double cooled_1q = 3e-3;
    // Motional quanta added per transport primitive.
    double heat_shuttle = 0.1;
    double heat_split_merge = 6;
    double heat_junction = 3;

    void validate() const;
};

nlohmann::json noise_to_json(const NoiseParams &p);
NoiseParams noise_from_json(const nlohmann::json &j);

double dephasing_prob(double t_idle_us, const NoiseParams &params);
double gate_error_prob(bool two_qubit, double tau_us, double chain_nbar, int chain_length, const NoiseParams &params);

struct HeatingTrace {
    /// Per stream op: summed n-bar of the chain it runs in, and chain length.
    std::vector<double> chain_nbar;
    std::vector<int> chain_length;
};

HeatingTrace accumulate_heating(const OpStream &stream, const QccdDevice &device, const NoiseParams &params);

enum class ChannelKind { z_error, x_error, depolarize1, depolarize2 };
std::string channel_stim_name(ChannelKind kind);

struct Channel {
    ChannelKind kind = ChannelKind::z_error;
    int q0 = 0;
    int q1 = -1;
    double p = 0;
    /// Stream op the channel is attached to.
    int op = 0;
    /// True if the channel acts before `op`, false if after it.
    bool before = false;
};

struct NoisyCircuit {
    std::vector<Channel> channels;
};

NoisyCircuit annotate(const OpStream &stream, const Schedule &schedule, const HeatingTrace &heating,
                      const ScheduleOptions &timing, const NoiseParams &params);

}  // namespace qccd

#endif
