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

#include "qccd/schedule.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <iterator>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace qccd {

double TimingTable::duration(OpKind kind, bool cooling) const {
    switch (kind) {
        case OpKind::ms:
            return ms_gate + (cooling ? cooling_extra_2q : 0);
        case OpKind::rx:
        case OpKind::ry:
        case OpKind::rz:
            return rotation;
        case OpKind::measure:
            return measure;
        case OpKind::reset:
            return reset;
        case OpKind::split:
            return split;
        case OpKind::merge:
            return merge;
        case OpKind::shuttle:
            return shuttle;
        case OpKind::junction_entry:
            return junction_entry;
        case OpKind::junction_exit:
            return junction_exit;
        case OpKind::gate_swap:
            return 3 * (ms_gate + (cooling ? cooling_extra_2q : 0));
    }
    return 0;
}

void TimingTable::validate() const {
    for (double v : {ms_gate, rotation, measure, reset, shuttle, split, merge, junction_entry, junction_exit}) {
        if (!(v > 0)) {
            throw std::invalid_argument("operation durations must be positive");
        }
    }
    if (cooling_extra_2q < 0) {
        throw std::invalid_argument("cooling time must be non-negative");
    }
}

nlohmann::json timing_to_json(const TimingTable &t) {
    return {{"ms_gate", t.ms_gate},
            {"rotation", t.rotation},
            {"measure", t.measure},
            {"reset", t.reset},
            {"shuttle", t.shuttle},
            {"split", t.split},
            {"merge", t.merge},
            {"junction_entry", t.junction_entry},
            {"junction_exit", t.junction_exit},
            {"cooling_extra_2q", t.cooling_extra_2q}};
}

TimingTable timing_from_json(const nlohmann::json &j) {
    TimingTable t;
    t.ms_gate = j.value("ms_gate", t.ms_gate);
    t.rotation = j.value("rotation", t.rotation);
    t.measure = j.value("measure", t.measure);
    t.reset = j.value("reset", t.reset);
    t.shuttle = j.value("shuttle", t.shuttle);
    t.split = j.value("split", t.split);
    t.merge = j.value("merge", t.merge);
    t.junction_entry = j.value("junction_entry", t.junction_entry);
    t.junction_exit = j.value("junction_exit", t.junction_exit);
    t.cooling_extra_2q = j.value("cooling_extra_2q", t.cooling_extra_2q);
    t.validate();
    return t;
}

namespace {

std::vector<int> topological_order(const OpStream &stream) {
    const size_t n = stream.ops.size();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> succ(n);
    for (size_t i = 0; i < n; i++) {
        for (int d : stream.ops[i].deps) {
            if (d < 0 || d >= (int)n) {
                throw ScheduleError("op " + std::to_string(i) + " depends on unknown op " + std::to_string(d));
            }
            succ[d].push_back((int)i);
            indegree[i]++;
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> q;
    for (size_t i = 0; i < n; i++) {
        if (indegree[i] == 0) {
            q.push((int)i);
        }
    }
    std::vector<int> order;
    while (!q.empty()) {
        int u = q.top();
        q.pop();
        order.push_back(u);
        for (int v : succ[u]) {
            if (--indegree[v] == 0) {
                q.push(v);
            }
        }
    }
    if (order.size() != n) {
        throw ScheduleError("dependency cycle among operations");
    }
    return order;
}

// Disjoint [start, end) intervals keyed by start.
class IntervalSet {
   public:
    // End of an interval overlapping [t, t + d), or -1 if none.
    double blocking_end(double t, double d) const {
        auto it = spans_.upper_bound(t);
        if (it != spans_.begin()) {
            auto prev = std::prev(it);
            if (prev->second > t) {
                return prev->second;
            }
        }
        if (it != spans_.end() && it->first < t + d) {
            return it->second;
        }
        return -1;
    }

    void insert(double s, double e) {
        auto it = spans_.lower_bound(s);
        if (it != spans_.begin()) {
            auto prev = std::prev(it);
            if (prev->second >= s) {
                s = prev->first;
                e = std::max(e, prev->second);
                it = spans_.erase(prev);
            }
        }
        while (it != spans_.end() && it->first <= e) {
            e = std::max(e, it->second);
            it = spans_.erase(it);
        }
        spans_.emplace(s, e);
    }

   private:
    std::map<double, double> spans_;
};

constexpr int kTransportKinds = 5;

int transport_index(OpKind kind) {
    return (int)kind - (int)OpKind::split;
}

}  // namespace

Schedule build_schedule(const OpStream &stream, const QccdDevice &device, const ScheduleOptions &options) {
    options.timing.validate();
    (void)device;
    const size_t n = stream.ops.size();
    Schedule s;
    s.start.assign(n, 0);
    s.end.assign(n, 0);
    std::array<IntervalSet, kTransportKinds> phases;
    const bool wise = options.wiring == Wiring::wise;
    for (int i : topological_order(stream)) {
        const StreamOp &op = stream.ops[i];
        double ready = 0;
        for (int d : op.deps) {
            ready = std::max(ready, s.end[d]);
        }
        double dur = options.timing.duration(op.kind, options.cooling);
        double t = ready;
        if (wise && is_transport(op.kind)) {
            int mine = transport_index(op.kind);
            bool moved = true;
            while (moved) {
                moved = false;
                for (int k = 0; k < kTransportKinds; k++) {
                    if (k == mine) {
                        continue;
                    }
                    double e = phases[k].blocking_end(t, dur);
                    if (e >= 0) {
                        t = e;
                        moved = true;
                    }
                }
            }
            phases[mine].insert(t, t + dur);
        }
        s.start[i] = t;
        s.end[i] = t + dur;
        s.makespan = std::max(s.makespan, s.end[i]);
    }
    return s;
}

Metrics metrics(const Schedule &schedule, const OpStream &stream, int rounds) {
    Metrics m;
    m.rounds = rounds;
    m.makespan = schedule.makespan;
    m.passes = stream.passes;
    auto counts = count_movement(stream);
    m.n_movement_ops = counts.n_movement_ops;
    m.n_gate_swaps = counts.n_gate_swaps;
    double first = std::numeric_limits<double>::infinity();
    double last = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> moves;
    for (size_t i = 0; i < stream.ops.size(); i++) {
        const StreamOp &op = stream.ops[i];
        // Restorative movement after a round's last measurement is not part of the round.
        if (op.round >= 0 && !is_movement(op.kind)) {
            first = std::min(first, schedule.start[i]);
            last = std::max(last, schedule.end[i]);
        }
        if (is_movement(op.kind)) {
            moves.push_back({schedule.start[i], schedule.end[i]});
        }
    }
    if (rounds > 0 && last > first) {
        m.elapsed_per_round = (last - first) / rounds;
    }
    std::sort(moves.begin(), moves.end());
    double cur_s = 0, cur_e = -1;
    for (const auto &[a, b] : moves) {
        if (a > cur_e) {
            if (cur_e > cur_s) {
                m.movement_time += cur_e - cur_s;
            }
            cur_s = a;
            cur_e = b;
        } else {
            cur_e = std::max(cur_e, b);
        }
    }
    if (cur_e > cur_s) {
        m.movement_time += cur_e - cur_s;
    }
    return m;
}

nlohmann::json metrics_to_json(const Metrics &m) {
    return {{"elapsed_per_round_us", m.elapsed_per_round},
            {"movement_time_us", m.movement_time},
            {"makespan_us", m.makespan},
            {"n_movement_ops", m.n_movement_ops},
            {"n_gate_swaps", m.n_gate_swaps},
            {"rounds", m.rounds},
            {"passes", m.passes}};
}

std::string check_schedule(const OpStream &stream, const Schedule &schedule, const QccdDevice &device,
                           const ScheduleOptions &options) {
    const size_t n = stream.ops.size();
    if (schedule.start.size() != n || schedule.end.size() != n) {
        return "schedule size does not match the op stream";
    }
    constexpr double tol = 1e-9;
    std::vector<std::vector<int>> by_component(device.size());
    std::vector<int> transports;
    for (size_t i = 0; i < n; i++) {
        const StreamOp &op = stream.ops[i];
        double dur = options.timing.duration(op.kind, options.cooling);
        if (std::abs(schedule.end[i] - schedule.start[i] - dur) > tol) {
            return "op " + std::to_string(i) + ": duration does not match the timing table";
        }
        for (int d : op.deps) {
            if (schedule.end[d] > schedule.start[i] + tol) {
                return "op " + std::to_string(i) + ": starts before dependency " + std::to_string(d) + " ends";
            }
        }
        for (int c : op.components()) {
            const Component &comp = device.at(c);
            if (comp.kind == ComponentKind::junction && comp.capacity > 1) {
                continue;
            }
            by_component[c].push_back((int)i);
        }
        if (is_transport(op.kind)) {
            transports.push_back((int)i);
        }
    }
    for (size_t c = 0; c < device.size(); c++) {
        auto &ops = by_component[c];
        std::sort(ops.begin(), ops.end(), [&](int a, int b) { return schedule.start[a] < schedule.start[b]; });
        for (size_t k = 1; k < ops.size(); k++) {
            if (schedule.start[ops[k]] < schedule.end[ops[k - 1]] - tol) {
                return "ops " + std::to_string(ops[k - 1]) + " and " + std::to_string(ops[k]) +
                       " overlap on component " + std::to_string(c);
            }
        }
    }
    if (options.wiring == Wiring::wise) {
        std::sort(transports.begin(), transports.end(),
                  [&](int a, int b) { return schedule.start[a] < schedule.start[b]; });
        // Sweep with the latest-ending op of each kind seen so far.
        std::array<int, kTransportKinds> latest;
        latest.fill(-1);
        for (int i : transports) {
            int mine = transport_index(stream.ops[i].kind);
            for (int k = 0; k < kTransportKinds; k++) {
                int j = latest[k];
                if (k != mine && j >= 0 && schedule.end[j] > schedule.start[i] + tol) {
                    return "WISE: " + op_kind_name(stream.ops[j].kind) + " op " + std::to_string(j) + " overlaps " +
                           op_kind_name(stream.ops[i].kind) + " op " + std::to_string(i);
                }
            }
            if (latest[mine] < 0 || schedule.end[i] > schedule.end[latest[mine]]) {
                latest[mine] = i;
            }
        }
    }
    return "";
}

std::string gantt_csv(const OpStream &stream, const Schedule &schedule) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "op,kind,start_us,end_us,component\n";
    for (size_t i = 0; i < stream.ops.size(); i++) {
        const StreamOp &op = stream.ops[i];
        for (int c : op.components()) {
            out << op.id << ',' << op_kind_name(op.kind) << ',' << schedule.start[i] << ',' << schedule.end[i] << ','
                << c << '\n';
        }
    }
    return out.str();
}

}  // namespace qccd
