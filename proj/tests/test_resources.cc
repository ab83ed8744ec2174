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

#include <random>

#include "qccd/resources.h"

using namespace qccd;

namespace {

// Every linear zone carries 10 dynamic + 10 shim electrodes, every junction
// zone 20 dynamic + 10 shim.
int64_t hand_electrodes(int64_t traps, int64_t cap, int64_t junctions) {
    return 20 * traps * cap + 30 * junctions;
}

DeviceCounts counts(int t, int k, int j) {
    DeviceCounts c;
    c.n_traps = t;
    c.capacity = k;
    c.n_junctions = j;
    return c;
}

}  // namespace

TEST(resources, electrode_formula_matches_hand_oracle) {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; i++) {
        int t = 1 + (int)(rng() % 3000);
        int k = 1 + (int)(rng() % 30);
        int j = (int)(rng() % 3000);
        ResourceEstimate e = estimate(counts(t, k, j), Wiring::standard);
        EXPECT_EQ(e.n_electrodes, hand_electrodes(t, k, j));
        EXPECT_EQ(e.n_dacs, (double)e.n_electrodes);
        EXPECT_EQ(e.power_mw * 5, e.data_rate_mbit_s * 3);
    }
}

TEST(resources, fixed_point_26000) {
    ResourceEstimate e = estimate(counts(1300, 1, 0), Wiring::standard);
    EXPECT_EQ(e.n_electrodes, 26000);
    EXPECT_EQ(e.power_mw, 780000);
    EXPECT_EQ(e.data_rate_mbit_s, 1300000);
}

TEST(resources, wise_dac_count) {
    // 10 traps of 2 zones, 4 junctions: 24 zones, 240 shims.
    ResourceEstimate e = estimate(counts(10, 2, 4), Wiring::wise);
    EXPECT_EQ(e.n_shim_electrodes, 240);
    EXPECT_EQ(e.n_electrodes, 20 * 20 + 30 * 4);
    EXPECT_DOUBLE_EQ(e.n_dacs, 102.4);
    EXPECT_EQ(e.power_mw, 3072);
    EXPECT_EQ(e.data_rate_mbit_s, 5120);
    EXPECT_EQ(estimate(counts(0, 2, 0), Wiring::wise).n_dacs, 0);
}

TEST(resources, wise_saves_two_orders_at_scale) {
    for (int t : {2000, 5000, 20000}) {
        for (int k : {2, 5}) {
            DeviceCounts c = counts(t, k, t);
            ResourceEstimate s = estimate(c, Wiring::standard);
            ResourceEstimate w = estimate(c, Wiring::wise);
            ASSERT_GE(s.n_electrodes, 20000);
            EXPECT_GE(s.data_rate_mbit_s, 100 * w.data_rate_mbit_s) << t << " " << k;
        }
    }
}

TEST(resources, wise_saving_holds_from_the_threshold_up) {
    // Junction-free devices carry the largest shim share.
    ResourceEstimate s = estimate(counts(501, 2, 0), Wiring::standard);
    ResourceEstimate w = estimate(counts(501, 2, 0), Wiring::wise);
    EXPECT_EQ(s.n_electrodes, 20040);
    EXPECT_GE(s.data_rate_mbit_s, 100 * w.data_rate_mbit_s);
    std::mt19937 rng(23);
    for (int i = 0; i < 2000; i++) {
        DeviceCounts c = counts(1 + (int)(rng() % 4000), 1 + (int)(rng() % 30), (int)(rng() % 2000));
        ResourceEstimate a = estimate(c, Wiring::standard);
        ResourceEstimate b = estimate(c, Wiring::wise);
        if (a.n_electrodes >= 20000) {
            EXPECT_GE(a.data_rate_mbit_s, 100 * b.data_rate_mbit_s);
        }
        EXPECT_EQ(b.power_mw * 5, b.data_rate_mbit_s * 3);
    }
}

TEST(resources, electrodes_for_target) {
    std::vector<SweepPoint> rows{{3, 2, 1e-3, 1000}, {5, 2, 1e-5, 3000}, {3, 5, 1e-5, 2500},
                                 {7, 2, 1e-7, 6000}, {5, 3, 1e-5, 2500}};
    auto a = electrodes_for_target(rows, 1e-4);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a->n_electrodes, 2500);
    EXPECT_EQ(a->distance, 3);
    auto b = electrodes_for_target(rows, 1e-6);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->distance, 7);
    EXPECT_FALSE(electrodes_for_target(rows, 1e-9).has_value());
    EXPECT_FALSE(electrodes_for_target({}, 1).has_value());
}
