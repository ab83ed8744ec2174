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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qccd/compile.h"

using namespace qccd;

TEST(noise, dephasing_values) {
    NoiseParams p;
    EXPECT_NEAR(dephasing_prob(2.2e6, p), (1 - std::exp(-1.0)) / 2, 1e-12);
    EXPECT_NEAR(dephasing_prob(400, p), 9.0901e-5, 1e-8);
    EXPECT_EQ(dephasing_prob(0, p), 0);
    p.improvement = 10;
    EXPECT_NEAR(dephasing_prob(2.2e6, p), (1 - std::exp(-1.0)) / 20, 1e-12);
}

TEST(noise, gate_error_calibration) {
    NoiseParams p;
    p.improvement = 5;
    EXPECT_NEAR(gate_error_prob(true, 40, 0, 2, p), 1e-3, 1e-15);
    EXPECT_NEAR(gate_error_prob(false, 5, 0, 2, p), 1e-4, 1e-15);
    p.cooling = true;
    EXPECT_NEAR(gate_error_prob(true, 890, 50, 7, p), 2e-3 / 5, 1e-15);
    EXPECT_NEAR(gate_error_prob(false, 5, 50, 7, p), 3e-3 / 5, 1e-15);
    EXPECT_THROW(gate_error_prob(true, 40, 0, 0, p), std::invalid_argument);
}

TEST(noise, gate_error_hand_formula) {
    NoiseParams p;
    double a2 = p.thermal_scale_2q * std::log(3.0) / 3;
    double want = 12.5 * 40e-6 + a2 * (2 * 4.5 + 1);
    EXPECT_NEAR(gate_error_prob(true, 40, 4.5, 3, p), want, 1e-15);
    // A lone ion has ln(1) = 0 thermal error.
    EXPECT_NEAR(gate_error_prob(false, 5, 100, 1, p), 12.5 * 5e-6, 1e-15);
}

TEST(noise, monotone_in_heat_time_and_idle) {
    NoiseParams p;
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 500; i++) {
        double nbar = 20 * u(rng);
        double tau = 100 * u(rng);
        int n = 2 + (int)(rng() % 10);
        EXPECT_LE(gate_error_prob(true, tau, nbar, n, p), gate_error_prob(true, tau, nbar + 1, n, p));
        EXPECT_LE(gate_error_prob(true, tau, nbar, n, p), gate_error_prob(true, tau + 1, nbar, n, p));
        double t = 1e5 * u(rng);
        EXPECT_LT(dephasing_prob(t, p), dephasing_prob(t + 10, p));
        double q = gate_error_prob(false, tau, nbar, n, p);
        EXPECT_GE(q, 0);
        EXPECT_LE(q, 1);
    }
}

TEST(noise, heating_follows_transport) {
    DeviceSpec s;
    s.topology = Topology::linear;
    s.n_traps = 2;
    s.capacity = 3;
    QccdDevice dev = build_device(s);
    OpStream st;
    st.num_ions = 2;
    st.initial_chains = {{0}, {1}};
    auto push = [&](OpKind k, int ion, int from, int to, int trap, int ion1 = -1) {
        StreamOp op;
        op.id = (int)st.ops.size();
        op.kind = k;
        op.ion0 = ion;
        op.ion1 = ion1;
        op.from = from;
        op.to = to;
        op.trap = trap;
        st.ops.push_back(op);
    };
    push(OpKind::split, 0, 0, 2, -1);
    push(OpKind::shuttle, 0, 2, 2, -1);
    push(OpKind::merge, 0, 2, 1, -1);
    push(OpKind::ms, 0, -1, -1, 1, 1);
    push(OpKind::reset, 0, -1, -1, 1);
    push(OpKind::rx, 1, -1, -1, 1);
    NoiseParams p;
    HeatingTrace h = accumulate_heating(st, dev, p);
    EXPECT_NEAR(h.chain_nbar[3], 6 + 0.1 + 6, 1e-12);
    EXPECT_EQ(h.chain_length[3], 2);
    EXPECT_NEAR(h.chain_nbar[4], 12.1, 1e-12);
    EXPECT_NEAR(h.chain_nbar[5], 0, 1e-12);
    p.cooling = true;
    EXPECT_NEAR(accumulate_heating(st, dev, p).chain_nbar[3], 0, 1e-12);
}

TEST(noise, channel_count_matches_stream) {
    for (const char *t : {"S,3,2,G", "R,3,2,L", "S,3,5,G"}) {
        CompileConfig c = parse_config_tuple(t);
        c.rounds = 2;
        CompileResult r = compile(c);
        size_t want = 0;
        std::vector<int> last(r.stream.num_ions, -1);
        for (size_t i = 0; i < r.stream.ops.size(); i++) {
            const auto &op = r.stream.ops[i];
            if (is_transport(op.kind)) {
                continue;
            }
            want++;
            for (int ion : {op.ion0, op.ion1}) {
                if (ion < 0) {
                    continue;
                }
                if (last[ion] >= 0 && r.schedule.start[i] > r.schedule.end[last[ion]]) {
                    want++;
                }
                last[ion] = (int)i;
            }
        }
        EXPECT_EQ(r.noisy.channels.size(), want) << t;
        for (const auto &ch : r.noisy.channels) {
            EXPECT_GE(ch.p, 0);
            EXPECT_LE(ch.p, ch.kind == ChannelKind::depolarize2 ? 15.0 / 16 : 0.75);
        }
    }
}

TEST(noise, improvement_divides_unclamped_channels) {
    CompileConfig c = parse_config_tuple("S,3,2,G");
    c.rounds = 2;
    CompileResult a = compile(c);
    c.improvement = 10;
    CompileResult b = compile(c);
    ASSERT_EQ(a.noisy.channels.size(), b.noisy.channels.size());
    for (size_t i = 0; i < a.noisy.channels.size(); i++) {
        double pa = a.noisy.channels[i].p;
        if (pa >= 0.75) {
            continue;
        }
        EXPECT_NEAR(b.noisy.channels[i].p, pa / 10, 1e-15 + 1e-12 * pa);
    }
}
