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


#ifndef QCCD_QCCD_C_H
#define QCCD_QCCD_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QCCD_API __declspec(dllexport)
#else
#define QCCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    QCCD_OK = 0,
    QCCD_ERR_INVALID_ARGUMENT = 1,
    QCCD_ERR_ROUTING = 2,
    QCCD_ERR_SCHEDULE = 3,
    QCCD_ERR_IO = 4,
    QCCD_ERR_VIOLATION = 5,
    QCCD_ERR_INTERNAL = 6,
} qccd_status;

/* One compiled configuration. */
typedef struct qccd_result qccd_result;

typedef struct {
    double elapsed_per_round_us;
    double movement_time_us;
    double makespan_us;
    int32_t n_movement_ops;
    int32_t n_gate_swaps;
    int32_t rounds;
    int32_t passes;
    int64_t n_electrodes;
    double n_dacs;
    int64_t data_rate_mbit_s;
    int64_t power_mw;
} qccd_metrics;

QCCD_API const char *qccd_version(void);

/* Message for the last failing call on this thread; "" if none. */
QCCD_API const char *qccd_last_error(void);

QCCD_API const char *qccd_status_name(qccd_status status);

/* `config_json` holds the configuration object; a "tuple" key such as
 * "S,3,2,G" is accepted as shorthand. */
QCCD_API qccd_status qccd_compile(const char *config_json, qccd_result **out);
QCCD_API void qccd_result_free(qccd_result *result);

QCCD_API qccd_status qccd_result_metrics(const qccd_result *result, qccd_metrics *out);

/* Strings below stay owned by the result and live until qccd_result_free. */
QCCD_API const char *qccd_result_stim(const qccd_result *result);
QCCD_API const char *qccd_result_trace(const qccd_result *result);
QCCD_API const char *qccd_result_gantt(const qccd_result *result);
QCCD_API const char *qccd_result_config_json(const qccd_result *result);
QCCD_API const char *qccd_result_metrics_json(const qccd_result *result);
QCCD_API const char *qccd_result_tuple(const qccd_result *result);

/* Writes every artifact into `dir`. */
QCCD_API qccd_status qccd_result_write(const qccd_result *result, const char *dir);

/* Runs a sweep described by `sweep_json`. On success *csv_out receives the
 * report; release it with qccd_string_free. Failed points are rows, not
 * errors. */
QCCD_API qccd_status qccd_sweep(const char *sweep_json, char **csv_out);

/* QCCD_OK if the JSON-lines trace is clean, QCCD_ERR_VIOLATION otherwise;
 * qccd_last_error then names the first offending op. */
QCCD_API qccd_status qccd_verify_trace(const char *trace_jsonl);

QCCD_API void qccd_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif
