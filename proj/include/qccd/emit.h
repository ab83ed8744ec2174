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


#ifndef QCCD_EMIT_H
#define QCCD_EMIT_H

#include <string>
#include <vector>

#include "qccd/codes.h"
#include "qccd/config.h"
#include "qccd/noise.h"
#include "qccd/resources.h"
#include "qccd/route.h"
#include "qccd/schedule.h"
#include "qccd/translate.h"

namespace qccd {

struct StimOptions {
    bool noise = true;
    bool detectors = true;
};

/// Everything needed to render one compiled memory experiment.
struct StimInput {
    const CodeLayout &layout;
    const LogicalCircuit &logical;
    const NativeCircuit &native;
    const OpStream &stream;
    const Schedule &schedule;
    const NoisyCircuit &noisy;
};

/// Stim circuit text. Logical gates appear in order of their scheduled
/// start, one per line, with each noise channel next to the gate its stream
/// op was lowered from. Detectors and the observable are appended at the end.
std::string to_stim(const StimInput &in, const StimOptions &options = {});

/// Shortest round-trip decimal form.
std::string format_probability(double p);

struct ReportRow {
    CompileConfig config;
    /// Empty on success.
    std::string error;
    Metrics metrics;
    ResourceEstimate resources;
    std::string stim_path;
};

std::string report_header();
std::string report_line(const ReportRow &row);
/// Header plus one line per row, in the given order.
std::string report_csv(const std::vector<ReportRow> &rows);

/// Writes through a sibling temp file and renames it into place.
void write_file_atomic(const std::string &path, const std::string &content);

}  // namespace qccd

#endif
