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


// Test-only replay of an op stream and its schedule. Shares no code with the
// router's own RoutingState: ion positions are kept as plain per-ion
// locations and every rule is re-derived from the device graph.

#ifndef QCCD_TESTS_REPLAY_H
#define QCCD_TESTS_REPLAY_H

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qccd/route.h"
#include "qccd/schedule.h"

namespace oracle {

struct ReplayReport {
    int capacity = 0;
    int exclusivity = 0;
    int pass_boundary = 0;
    int colocation = 0;
    int happens_before = 0;
    int adjacency = 0;
    std::string first;

    int total() const {
        return capacity + exclusivity + pass_boundary + colocation + happens_before + adjacency;
    }
    void note(int &counter, const std::string &what) {
        counter++;
        if (first.empty()) {
            first = what;
        }
    }
};

inline bool touches(const qccd::Component &seg, int node) {
    return seg.kind == qccd::ComponentKind::segment && (seg.a == node || seg.b == node);
}

// Replays the stream (positions, capacities, co-location, pass boundaries).
inline void replay_stream(const qccd::OpStream &s, const qccd::QccdDevice &dev, ReplayReport &rep) {
    using qccd::ComponentKind;
    using qccd::OpKind;
    std::vector<int> where(s.num_ions, -1);
    for (size_t c = 0; c < s.initial_chains.size(); c++) {
        for (int ion : s.initial_chains[c]) {
            where[ion] = (int)c;
        }
    }
    auto occupancy = [&](int c) { return (int)std::count(where.begin(), where.end(), c); };
    auto boundary = [&](int at) {
        for (size_t c = 0; c < dev.size(); c++) {
            const auto &comp = dev.at((int)c);
            int n = occupancy((int)c);
            if ((comp.kind != ComponentKind::trap && n > 0) || (comp.kind == ComponentKind::trap && n >= comp.capacity)) {
                rep.note(rep.pass_boundary, "pass boundary after op " + std::to_string(at));
            }
        }
    };
    boundary(-1);
    for (size_t k = 0; k < s.ops.size(); k++) {
        const auto &op = s.ops[k];
        if (k > 0 && s.ops[k - 1].pass != op.pass) {
            boundary((int)k - 1);
        }
        if (!qccd::is_transport(op.kind)) {
            bool ok = where[op.ion0] == op.trap && dev.is_trap(op.trap);
            if (op.ion1 >= 0) {
                ok = ok && where[op.ion1] == op.trap;
            }
            if (!ok) {
                rep.note(rep.colocation, "op " + std::to_string(k) + " not co-located");
            }
            continue;
        }
        if (where[op.ion0] != op.from) {
            rep.note(rep.adjacency, "op " + std::to_string(k) + " moves an ion from the wrong place");
        }
        if (op.kind == OpKind::shuttle) {
            if (op.from != op.to || !dev.is_segment(op.from)) {
                rep.note(rep.adjacency, "op " + std::to_string(k) + " shuttle off a segment");
            }
            continue;
        }
        const auto &a = dev.at(op.from);
        const auto &b = dev.at(op.to);
        bool linked = touches(a, op.to) || touches(b, op.from);
        if (!linked) {
            rep.note(rep.adjacency, "op " + std::to_string(k) + " jumps between unlinked components");
        }
        where[op.ion0] = op.to;
        if (occupancy(op.to) > b.capacity) {
            rep.note(rep.capacity, "op " + std::to_string(k) + " overfills component " + std::to_string(op.to));
        }
    }
    if (!s.ops.empty()) {
        boundary((int)s.ops.size() - 1);
    }
}

// Checks deps, per-ion program order and exclusive use of every trap,
// segment and single-ion junction in time.
inline void replay_schedule(const qccd::OpStream &s, const qccd::Schedule &sch, const qccd::QccdDevice &dev,
                            ReplayReport &rep) {
    constexpr double eps = 1e-9;
    std::map<int, std::vector<int>> by_ion, by_comp;
    for (size_t k = 0; k < s.ops.size(); k++) {
        const auto &op = s.ops[k];
        for (int d : op.deps) {
            if (sch.end[d] > sch.start[k] + eps) {
                rep.note(rep.happens_before, "op " + std::to_string(k) + " starts before dep " + std::to_string(d));
            }
        }
        for (int ion : {op.ion0, op.ion1}) {
            if (ion >= 0) {
                by_ion[ion].push_back((int)k);
            }
        }
        std::vector<int> comps;
        if (!qccd::is_transport(op.kind)) {
            comps = {op.trap};
        } else {
            comps = {op.from, op.to};
        }
        for (int c : comps) {
            const auto &comp = dev.at(c);
            if (comp.kind == qccd::ComponentKind::junction && comp.capacity > 1) {
                continue;
            }
            auto &v = by_comp[c];
            if (v.empty() || v.back() != (int)k) {
                v.push_back((int)k);
            }
        }
    }
    for (auto &[ion, ops] : by_ion) {
        for (size_t i = 1; i < ops.size(); i++) {
            if (sch.start[ops[i]] + eps < sch.end[ops[i - 1]]) {
                rep.note(rep.happens_before, "ion " + std::to_string(ion) + " ops out of program order");
            }
        }
    }
    for (auto &[c, ops] : by_comp) {
        std::sort(ops.begin(), ops.end(), [&](int x, int y) { return sch.start[x] < sch.start[y]; });
        for (size_t i = 1; i < ops.size(); i++) {
            if (sch.start[ops[i]] + eps < sch.end[ops[i - 1]]) {
                rep.note(rep.exclusivity, "component " + std::to_string(c) + " used by overlapping ops");
            }
        }
    }
}

}  // namespace oracle

#endif
