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


#ifndef QCCD_COMPILE_H
#define QCCD_COMPILE_H

#include <string>
#include <vector>

#include "qccd/codes.h"
#include "qccd/config.h"
#include "qccd/device.h"
#include "qccd/emit.h"
#include "qccd/noise.h"
#include "qccd/place.h"
#include "qccd/resources.h"
#include "qccd/route.h"
#include "qccd/schedule.h"
#include "qccd/translate.h"

namespace qccd {

struct CompileResult {
    CompileConfig config;
    CodeLayout layout;
    LogicalCircuit logical;
    NativeCircuit native;
    QccdDevice device;
    Clustering clustering;
    Mapping mapping;
    OpStream stream;
    ScheduleOptions schedule_options;
    Schedule schedule;
    Metrics metrics;
    HeatingTrace heating;
    NoisyCircuit noisy;
    ResourceEstimate resources;
    std::string stim;
};

/// Runs the whole flow for one configuration. Throws std::invalid_argument
/// on a bad config and RoutingError or ScheduleError if compilation fails.
CompileResult compile(const CompileConfig &config, const StimOptions &stim = {});

/// JSON lines: a header (device, chains, wiring, timing) then one object per
/// op with its scheduled start and end.
std::string trace_jsonl(const CompileResult &r);

/// Writes circuit.stim, trace.jsonl, gantt.csv, metrics.json, metrics.csv
/// and config.json into `dir`, creating it. Returns the Stim file path.
std::string write_artifacts(const CompileResult &r, const std::string &dir);

/// Replays a trace through the routing and timing checkers. Returns the
/// first violation, or "" if the trace is clean.
std::string verify_trace(const std::string &jsonl);

struct SweepConfig {
    std::vector<CodeKind> codes{CodeKind::rotated_surface};
    std::vector<int> distances{3};
    std::vector<int> capacities{2};
    std::vector<Topology> topologies{Topology::grid};
    std::vector<Wiring> wirings{Wiring::standard};
    std::vector<double> improvements{1};
    /// Applied to every point, including rounds, timing and noise.
    CompileConfig base;
    /// Empty: keep everything in memory.
    std::string out_dir;
    int jobs = 1;

    void validate() const;
    std::vector<CompileConfig> points() const;
};

nlohmann::json sweep_to_json(const SweepConfig &s);
SweepConfig sweep_from_json(const nlohmann::json &j);

/// Compiles every grid point on `jobs` workers. A failing point becomes a
/// row with its error set. Rows are sorted by configuration, so the result
/// does not depend on the worker count. Writes sweep.csv when out_dir is set.
std::vector<ReportRow> run_sweep(const SweepConfig &sweep);

/// Directory name for one point, e.g. "S_d3_k2_G_standard_f1".
std::string point_name(const CompileConfig &c);

}  // namespace qccd

#endif
