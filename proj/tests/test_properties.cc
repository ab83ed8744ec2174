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


// Randomized router and scheduler safety properties. Every instance is
// replayed by the independent checker in oracles/replay.h.

#include <gtest/gtest.h>

#include <random>

#include "oracles/random_instance.h"
#include "oracles/replay.h"
#include "qccd/compile.h"

using namespace qccd;

namespace {

using oracle::Instance;

// Gates must appear once each, in program order per qubit.
void expect_program_order(const Instance &in, const OpStream &s, int trial) {
    std::vector<std::vector<int>> want(in.native.num_qubits), got(in.native.num_qubits);
    for (size_t i = 0; i < in.native.ops.size(); i++) {
        const auto &op = in.native.ops[i];
        want[op.q0].push_back((int)i);
        if (op.q1 >= 0) {
            want[op.q1].push_back((int)i);
        }
    }
    for (const auto &op : s.ops) {
        if (op.native >= 0) {
            got[op.ion0].push_back(op.native);
            if (op.ion1 >= 0) {
                got[op.ion1].push_back(op.native);
            }
        }
    }
    EXPECT_EQ(got, want) << "trial " << trial;
}

}  // namespace

TEST(properties, router_safety_on_random_instances) {
    std::mt19937 rng(20260101);
    const int kTrials = 1000;
    int routed = 0;
    int unroutable = 0;
    oracle::ReplayReport total;
    for (int trial = 0; trial < kTrials; trial++) {
        Instance in = oracle::random_instance(rng);
        RouteInput input{in.native, in.device, in.chains, in.mobile, {}};
        OpStream s;
        try {
            s = route_circuit(input);
        } catch (const RoutingError &e) {
            unroutable++;
            ADD_FAILURE() << "trial " << trial << ": " << e.what();
            continue;
        }
        routed++;
        EXPECT_EQ(check_stream(s, in.device), "") << "trial " << trial;
        oracle::ReplayReport rep;
        oracle::replay_stream(s, in.device, rep);
        expect_program_order(in, s, trial);
        for (Wiring w : {Wiring::standard, Wiring::wise}) {
            ScheduleOptions o;
            o.wiring = w;
            Schedule sch = build_schedule(s, in.device, o);
            EXPECT_EQ(check_schedule(s, sch, in.device, o), "") << "trial " << trial;
            oracle::replay_schedule(s, sch, in.device, rep);
        }
        EXPECT_EQ(rep.total(), 0) << "trial " << trial << ": " << rep.first;
        total.capacity += rep.capacity;
        total.exclusivity += rep.exclusivity;
        total.pass_boundary += rep.pass_boundary;
        total.colocation += rep.colocation;
        total.happens_before += rep.happens_before;
        total.adjacency += rep.adjacency;
    }
    EXPECT_EQ(routed, kTrials);
    EXPECT_EQ(unroutable, 0);
    EXPECT_EQ(total.total(), 0);
}

TEST(properties, compiled_codes_replay_cleanly) {
    std::mt19937 rng(77);
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 60; trial++) {
        CompileConfig c;
        c.code = (CodeKind)uni(0, 2);
        c.distance = uni(2, 4);
        c.capacity = uni(2, 7);
        c.topology = (Topology)uni(0, 3);
        c.wiring = (Wiring)uni(0, 1);
        c.rounds = uni(1, 3);
        c.cooling = uni(0, 3) == 0;
        CompileResult r = compile(c);
        oracle::ReplayReport rep;
        oracle::replay_stream(r.stream, r.device, rep);
        oracle::replay_schedule(r.stream, r.schedule, r.device, rep);
        EXPECT_EQ(rep.total(), 0) << format_config_tuple(c) << ": " << rep.first;
        EXPECT_EQ(check_schedule(r.stream, r.schedule, r.device, r.schedule_options), "");
    }
}
