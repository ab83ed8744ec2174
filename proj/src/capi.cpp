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


#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <string>

#include "qccd/compile.h"
#include "qccd/qccd_c.h"

struct qccd_result {
    qccd::CompileResult r;
    std::string trace;
    std::string gantt;
    std::string config_json;
    std::string metrics_json;
    std::string tuple;
};

namespace {

thread_local std::string last_error;

qccd_status fail(qccd_status s, const std::string &msg) {
    last_error = msg;
    return s;
}

// Maps the library's exception types onto status codes.
template <typename F>
qccd_status guarded(F &&f) {
    last_error.clear();
    try {
        return f();
    } catch (const qccd::RoutingError &e) {
        return fail(QCCD_ERR_ROUTING, e.what());
    } catch (const qccd::RoutingViolation &e) {
        return fail(QCCD_ERR_ROUTING, e.what());
    } catch (const qccd::ScheduleError &e) {
        return fail(QCCD_ERR_SCHEDULE, e.what());
    } catch (const nlohmann::json::exception &e) {
        return fail(QCCD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(QCCD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::filesystem::filesystem_error &e) {
        return fail(QCCD_ERR_IO, e.what());
    } catch (const std::exception &e) {
        return fail(QCCD_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QCCD_ERR_INTERNAL, "unknown error");
    }
}

char *dup_string(const std::string &s) {
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (p) {
        std::memcpy(p, s.c_str(), s.size() + 1);
    }
    return p;
}

}  // namespace

extern "C" {

const char *qccd_version(void) {
    return "0.1.0";
}

const char *qccd_last_error(void) {
    return last_error.c_str();
}

const char *qccd_status_name(qccd_status status) {
    switch (status) {
        case QCCD_OK:
            return "ok";
        case QCCD_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case QCCD_ERR_ROUTING:
            return "routing failed";
        case QCCD_ERR_SCHEDULE:
            return "scheduling failed";
        case QCCD_ERR_IO:
            return "i/o error";
        case QCCD_ERR_VIOLATION:
            return "invariant violation";
        case QCCD_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

qccd_status qccd_compile(const char *config_json, qccd_result **out) {
    if (!config_json || !out) {
        return fail(QCCD_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] {
        auto cfg = qccd::config_from_json(nlohmann::json::parse(config_json));
        auto res = std::make_unique<qccd_result>();
        res->r = qccd::compile(cfg);
        res->trace = qccd::trace_jsonl(res->r);
        res->gantt = qccd::gantt_csv(res->r.stream, res->r.schedule);
        res->config_json = qccd::config_to_json(res->r.config).dump(2);
        nlohmann::json m = qccd::metrics_to_json(res->r.metrics);
        m["resources"] = qccd::resources_to_json(res->r.resources);
        res->metrics_json = m.dump(2);
        res->tuple = qccd::format_config_tuple(res->r.config);
        *out = res.release();
        return QCCD_OK;
    });
}

void qccd_result_free(qccd_result *result) {
    delete result;
}

qccd_status qccd_result_metrics(const qccd_result *result, qccd_metrics *out) {
    if (!result || !out) {
        return fail(QCCD_ERR_INVALID_ARGUMENT, "null argument");
    }
    const auto &m = result->r.metrics;
    const auto &e = result->r.resources;
    *out = qccd_metrics{m.elapsed_per_round, m.movement_time, m.makespan, m.n_movement_ops, m.n_gate_swaps,
                        m.rounds, m.passes, e.n_electrodes, e.n_dacs, e.data_rate_mbit_s, e.power_mw};
    return QCCD_OK;
}

const char *qccd_result_stim(const qccd_result *result) {
    return result ? result->r.stim.c_str() : "";
}

const char *qccd_result_trace(const qccd_result *result) {
    return result ? result->trace.c_str() : "";
}

const char *qccd_result_gantt(const qccd_result *result) {
    return result ? result->gantt.c_str() : "";
}

const char *qccd_result_config_json(const qccd_result *result) {
    return result ? result->config_json.c_str() : "";
}

const char *qccd_result_metrics_json(const qccd_result *result) {
    return result ? result->metrics_json.c_str() : "";
}

const char *qccd_result_tuple(const qccd_result *result) {
    return result ? result->tuple.c_str() : "";
}

qccd_status qccd_result_write(const qccd_result *result, const char *dir) {
    if (!result || !dir) {
        return fail(QCCD_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        try {
            qccd::write_artifacts(result->r, dir);
        } catch (const std::runtime_error &e) {
            return fail(QCCD_ERR_IO, e.what());
        }
        return QCCD_OK;
    });
}

qccd_status qccd_sweep(const char *sweep_json, char **csv_out) {
    if (!sweep_json || !csv_out) {
        return fail(QCCD_ERR_INVALID_ARGUMENT, "null argument");
    }
    *csv_out = nullptr;
    return guarded([&] {
        auto sweep = qccd::sweep_from_json(nlohmann::json::parse(sweep_json));
        std::vector<qccd::ReportRow> rows;
        try {
            rows = qccd::run_sweep(sweep);
        } catch (const std::runtime_error &e) {
            return fail(QCCD_ERR_IO, e.what());
        }
        *csv_out = dup_string(qccd::report_csv(rows));
        return *csv_out ? QCCD_OK : fail(QCCD_ERR_INTERNAL, "out of memory");
    });
}

qccd_status qccd_verify_trace(const char *trace_jsonl) {
    if (!trace_jsonl) {
        return fail(QCCD_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::string err = qccd::verify_trace(trace_jsonl);
        return err.empty() ? QCCD_OK : fail(QCCD_ERR_VIOLATION, err);
    });
}

void qccd_string_free(char *s) {
    std::free(s);
}

}  // extern "C"
