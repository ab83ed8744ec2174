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

#ifndef QCCD_SCHEDULE_H
#define QCCD_SCHEDULE_H

#include <string>
#include <vector>

#include "json.hpp"
#include "qccd/route.h"

namespace qccd {

/// Operation durations in microseconds.
struct TimingTable {
    double ms_gate = 40;
    double rotation = 5;
    double measure = 400;
    double reset = 50;
    double shuttle = 5;
    double split = 80;
    double merge = 80;
    double junction_entry = 100;
    double junction_exit = 100;
    double cooling_extra_2q = 850;

    /// A gate swap costs three MS gates.
    double duration(OpKind kind, bool cooling) const;
    void validate() const;
};

nlohmann::json timing_to_json(const TimingTable &t);
TimingTable timing_from_json(const nlohmann::json &j);

struct ScheduleOptions {
    Wiring wiring = Wiring::standard;
    TimingTable timing;
    /// Adds the recooling time to every two-qubit gate.
    bool cooling = false;
};

struct Schedule {
    std::vector<double> start;
    std::vector<double> end;
    double makespan = 0;
};

class ScheduleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Greedy as-soon-as-possible list schedule in topological (op id) order.
/// Under WISE wiring a transport op is further delayed until no transport
/// of a different kind overlaps it anywhere on the device.
Schedule build_schedule(const OpStream &stream, const QccdDevice &device, const ScheduleOptions &options);

struct Metrics {
    double elapsed_per_round = 0;
    double movement_time = 0;
    double makespan = 0;
    int n_movement_ops = 0;
    int n_gate_swaps = 0;
    int rounds = 0;
    int passes = 0;
};

/// elapsed_per_round spans the gates tagged with a syndrome round, divided
/// by `rounds`; movement_time is the length of the union of movement intervals.
Metrics metrics(const Schedule &schedule, const OpStream &stream, int rounds);

nlohmann::json metrics_to_json(const Metrics &m);

/// Returns the first broken timing invariant, or "" if the schedule is sound.
std::string check_schedule(const OpStream &stream, const Schedule &schedule, const QccdDevice &device,
                           const ScheduleOptions &options);

/// op,kind,start,end,component rows, one per (op, component) pair.
std::string gantt_csv(const OpStream &stream, const Schedule &schedule);

}  // namespace qccd

#endif
