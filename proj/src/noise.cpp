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

#include "qccd/noise.h"

#include <algorithm>
#include <cmath>

namespace qccd {

void NoiseParams::validate() const {
    if (!(t2_us > 0)) {
        throw std::invalid_argument("T2 must be positive");
    }
    if (!(improvement >= 1)) {
        throw std::invalid_argument("gate improvement must be at least 1");
    }
    for (double p : {p_reset, p_measure, cooled_2q, cooled_1q}) {
        if (p < 0 || p > 1) {
            throw std::invalid_argument("probabilities must lie in [0, 1]");
        }
    }
    for (double v : {heating_rate, thermal_scale_2q, thermal_scale_1q, heat_shuttle, heat_split_merge, heat_junction}) {
        if (v < 0) {
            throw std::invalid_argument("noise rates must be non-negative");
        }
    }
}

nlohmann::json noise_to_json(const NoiseParams &p) {
    return {{"t2_us", p.t2_us},
            {"p_reset", p.p_reset},
            {"p_measure", p.p_measure},
            {"heating_rate_per_s", p.heating_rate},
            {"thermal_scale_2q", p.thermal_scale_2q},
            {"thermal_scale_1q", p.thermal_scale_1q},
            {"improvement", p.improvement},
            {"cooling", p.cooling},
            {"cooled_2q", p.cooled_2q},
            {"cooled_1q", p.cooled_1q},
            {"heat_shuttle", p.heat_shuttle},
            {"heat_split_merge", p.heat_split_merge},
            {"heat_junction", p.heat_junction}};
}

NoiseParams noise_from_json(const nlohmann::json &j) {
    NoiseParams p;
    p.t2_us = j.value("t2_us", p.t2_us);
    p.p_reset = j.value("p_reset", p.p_reset);
    p.p_measure = j.value("p_measure", p.p_measure);
    p.heating_rate = j.value("heating_rate_per_s", p.heating_rate);
    p.thermal_scale_2q = j.value("thermal_scale_2q", p.thermal_scale_2q);
    p.thermal_scale_1q = j.value("thermal_scale_1q", p.thermal_scale_1q);
    p.improvement = j.value("improvement", p.improvement);
    p.cooling = j.value("cooling", p.cooling);
    p.cooled_2q = j.value("cooled_2q", p.cooled_2q);
    p.cooled_1q = j.value("cooled_1q", p.cooled_1q);
    p.heat_shuttle = j.value("heat_shuttle", p.heat_shuttle);
    p.heat_split_merge = j.value("heat_split_merge", p.heat_split_merge);
    p.heat_junction = j.value("heat_junction", p.heat_junction);
    p.validate();
    return p;
}

double dephasing_prob(double t_idle_us, const NoiseParams &params) {
    if (t_idle_us <= 0) {
        return 0;
    }
    return (1 - std::exp(-t_idle_us / params.t2_us)) / 2 / params.improvement;
}

double gate_error_prob(bool two_qubit, double tau_us, double chain_nbar, int chain_length, const NoiseParams &params) {
    if (chain_length < 1) {
        throw std::invalid_argument("chain length must be at least 1");
    }
    double p;
    if (params.cooling) {
        p = two_qubit ? params.cooled_2q : params.cooled_1q;
    } else {
        double n = chain_length;
        double a = (two_qubit ? params.thermal_scale_2q : params.thermal_scale_1q) * std::log(n) / n;
        p = params.heating_rate * tau_us * 1e-6 + a * (2 * chain_nbar + 1);
    }
    return std::clamp(p / params.improvement, 0.0, 1.0);
}

HeatingTrace accumulate_heating(const OpStream &stream, const QccdDevice &device, const NoiseParams &params) {
    HeatingTrace h;
    h.chain_nbar.assign(stream.ops.size(), 0);
    h.chain_length.assign(stream.ops.size(), 0);
    RoutingState state(device, stream.initial_chains, stream.num_ions);
    std::vector<double> nbar(stream.num_ions, 0);
    for (size_t i = 0; i < stream.ops.size(); i++) {
        const StreamOp &op = stream.ops[i];
        state.apply(op);
        if (is_transport(op.kind)) {
            if (params.cooling) {
                continue;
            }
            switch (op.kind) {
                case OpKind::shuttle:
                    nbar[op.ion0] += params.heat_shuttle;
                    break;
                case OpKind::split:
                case OpKind::merge:
                    nbar[op.ion0] += params.heat_split_merge;
                    break;
                default:
                    nbar[op.ion0] += params.heat_junction;
                    break;
            }
            continue;
        }
        const auto &chain = state.chain(op.trap);
        double sum = 0;
        for (int ion : chain) {
            sum += nbar[ion];
        }
        h.chain_nbar[i] = sum;
        h.chain_length[i] = (int)chain.size();
        if (op.kind == OpKind::reset) {
            nbar[op.ion0] = 0;
        }
    }
    return h;
}

std::string channel_stim_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::z_error:
            return "Z_ERROR";
        case ChannelKind::x_error:
            return "X_ERROR";
        case ChannelKind::depolarize1:
            return "DEPOLARIZE1";
        case ChannelKind::depolarize2:
            return "DEPOLARIZE2";
    }
    return "?";
}

NoisyCircuit annotate(const OpStream &stream, const Schedule &schedule, const HeatingTrace &heating,
                      const ScheduleOptions &timing, const NoiseParams &params) {
    params.validate();
    NoisyCircuit out;
    const double f = params.improvement;
    // A depolarizing channel saturates at the fully mixed state.
    const double max_p1 = 0.75;
    const double max_p2 = 15.0 / 16.0;
    std::vector<int> last_gate(stream.num_ions, -1);
    for (size_t i = 0; i < stream.ops.size(); i++) {
        const StreamOp &op = stream.ops[i];
        if (is_transport(op.kind)) {
            continue;
        }
        for (int ion : {op.ion0, op.ion1}) {
            if (ion < 0) {
                continue;
            }
            int prev = last_gate[ion];
            if (prev >= 0) {
                double gap = schedule.start[i] - schedule.end[prev];
                if (gap > 0) {
                    out.channels.push_back({ChannelKind::z_error, ion, -1, dephasing_prob(gap, params), (int)i, true});
                }
            }
            last_gate[ion] = (int)i;
        }
        double tau = timing.timing.duration(op.kind, timing.cooling);
        switch (op.kind) {
            case OpKind::rx:
            case OpKind::ry:
            case OpKind::rz: {
                double p = gate_error_prob(false, tau, heating.chain_nbar[i], heating.chain_length[i], params);
                out.channels.push_back({ChannelKind::depolarize1, op.ion0, -1, std::min(p, max_p1), (int)i, false});
                break;
            }
            case OpKind::ms: {
                double p = gate_error_prob(true, tau, heating.chain_nbar[i], heating.chain_length[i], params);
                out.channels.push_back({ChannelKind::depolarize2, op.ion0, op.ion1, std::min(p, max_p2), (int)i, false});
                break;
            }
            case OpKind::gate_swap: {
                // Three MS gates; first order in p so the improvement factor scales it exactly.
                double p = gate_error_prob(true, tau / 3, heating.chain_nbar[i], heating.chain_length[i], params);
                out.channels.push_back(
                    {ChannelKind::depolarize2, op.ion0, op.ion1, std::min(3 * p, max_p2), (int)i, false});
                break;
            }
            case OpKind::reset:
                out.channels.push_back({ChannelKind::x_error, op.ion0, -1, params.p_reset / f, (int)i, false});
                break;
            case OpKind::measure:
                out.channels.push_back({ChannelKind::x_error, op.ion0, -1, params.p_measure / f, (int)i, true});
                break;
            default:
                break;
        }
    }
    return out;
}

}  // namespace qccd
