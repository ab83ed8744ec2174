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


// Command-line front end. Talks to the compiler only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qccd/qccd_c.h"

namespace {

struct Flags {
    std::string config_path;
    std::string tuple;
    std::vector<std::string> code;
    std::vector<int> distance;
    std::vector<int> capacity;
    std::vector<std::string> topology;
    std::vector<std::string> wiring;
    std::vector<double> improvement;
    int rounds = 0;
    bool cooling = false;
    uint64_t seed = 0;
    std::string out;
    int jobs = 1;
    std::string trace;
};

struct OptionSet {
    CLI::Option *config = nullptr;
    CLI::Option *tuple = nullptr;
    CLI::Option *code = nullptr;
    CLI::Option *distance = nullptr;
    CLI::Option *capacity = nullptr;
    CLI::Option *topology = nullptr;
    CLI::Option *wiring = nullptr;
    CLI::Option *improvement = nullptr;
    CLI::Option *rounds = nullptr;
    CLI::Option *cooling = nullptr;
    CLI::Option *seed = nullptr;
};

OptionSet add_config_flags(CLI::App *app, Flags &f, bool lists) {
    OptionSet o;
    o.config = app->add_option("--config", f.config_path, "JSON configuration file")->envname("QCCD_CONFIG");
    o.tuple = app->add_option("tuple", f.tuple, "CODE,d,capacity,TOPO shorthand, e.g. S,3,2,G");
    auto list = [&](CLI::Option *opt) {
        if (lists) {
            opt->delimiter(',');
        } else {
            opt->expected(1);
        }
        return opt;
    };
    o.code = list(app->add_option("--code", f.code, "repetition | rotated | unrotated (or R/S/U)"))->envname("QCCD_CODE");
    o.distance = list(app->add_option("--distance", f.distance, "code distance"))->envname("QCCD_DISTANCE");
    o.capacity = list(app->add_option("--capacity", f.capacity, "ions per trap"))->envname("QCCD_CAPACITY");
    o.topology =
        list(app->add_option("--topology", f.topology, "grid | linear | switch | single_chain (or G/L/W/C)"))
            ->envname("QCCD_TOPOLOGY");
    o.wiring = list(app->add_option("--wiring", f.wiring, "standard | wise"))->envname("QCCD_WIRING");
    o.improvement =
        list(app->add_option("--improvement", f.improvement, "gate improvement factor"))->envname("QCCD_IMPROVEMENT");
    o.rounds = app->add_option("--rounds", f.rounds, "syndrome rounds (0: distance)")->envname("QCCD_ROUNDS");
    o.cooling = app->add_flag("--cooling", f.cooling, "recool before every two-qubit gate")->envname("QCCD_COOLING");
    o.seed = app->add_option("--seed", f.seed, "echoed into reports")->envname("QCCD_SEED");
    return o;
}

nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return nlohmann::json::parse(in);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Single-point config: file, then tuple, then individual flags.
nlohmann::json point_json(const Flags &f, const OptionSet &o) {
    nlohmann::json j = *o.config ? read_json_file(f.config_path) : nlohmann::json::object();
    if (*o.tuple) {
        j["tuple"] = f.tuple;
    }
    if (*o.code) {
        j["code"] = f.code.front();
    }
    if (*o.distance) {
        j["distance"] = f.distance.front();
    }
    if (*o.capacity) {
        j["capacity"] = f.capacity.front();
    }
    if (*o.topology) {
        j["topology"] = f.topology.front();
    }
    if (*o.wiring) {
        j["wiring"] = f.wiring.front();
    }
    if (*o.improvement) {
        j["improvement"] = f.improvement.front();
    }
    if (*o.rounds) {
        j["rounds"] = f.rounds;
    }
    if (*o.cooling) {
        j["cooling"] = f.cooling;
    }
    if (*o.seed) {
        j["seed"] = f.seed;
    }
    return j;
}

int report_failure(qccd_status s) {
    std::fprintf(stderr, "error (%s): %s\n", qccd_status_name(s), qccd_last_error());
    return 1 + static_cast<int>(s);
}

int run_compile(const Flags &f, const OptionSet &o) {
    qccd_result *res = nullptr;
    std::string cfg = point_json(f, o).dump();
    qccd_status s = qccd_compile(cfg.c_str(), &res);
    if (s != QCCD_OK) {
        return report_failure(s);
    }
    qccd_metrics m{};
    qccd_result_metrics(res, &m);
    std::string out = f.out.empty() ? "." : f.out;
    s = qccd_result_write(res, out.c_str());
    if (s != QCCD_OK) {
        qccd_result_free(res);
        return report_failure(s);
    }
    std::printf("%s  elapsed/round %.1f us  movement ops %d  movement time %.1f us  electrodes %lld  -> %s\n",
                qccd_result_tuple(res), m.elapsed_per_round_us, m.n_movement_ops, m.movement_time_us,
                static_cast<long long>(m.n_electrodes), out.c_str());
    qccd_result_free(res);
    return 0;
}

int run_sweep(const Flags &f, const OptionSet &o) {
    nlohmann::json j = *o.config ? read_json_file(f.config_path) : nlohmann::json::object();
    nlohmann::json base = j.value("base", nlohmann::json::object());
    if (*o.tuple) {
        base["tuple"] = f.tuple;
    }
    if (*o.rounds) {
        base["rounds"] = f.rounds;
    }
    if (*o.cooling) {
        base["cooling"] = f.cooling;
    }
    if (*o.seed) {
        base["seed"] = f.seed;
    }
    j["base"] = base;
    if (*o.code) {
        j["codes"] = f.code;
    }
    if (*o.distance) {
        j["distances"] = f.distance;
    }
    if (*o.capacity) {
        j["capacities"] = f.capacity;
    }
    if (*o.topology) {
        j["topologies"] = f.topology;
    }
    if (*o.wiring) {
        j["wirings"] = f.wiring;
    }
    if (*o.improvement) {
        j["improvements"] = f.improvement;
    }
    if (!f.out.empty()) {
        j["out_dir"] = f.out;
    }
    j["jobs"] = f.jobs;
    char *csv = nullptr;
    std::string text = j.dump();
    qccd_status s = qccd_sweep(text.c_str(), &csv);
    if (s != QCCD_OK) {
        return report_failure(s);
    }
    std::fputs(csv, stdout);
    qccd_string_free(csv);
    return 0;
}

int run_verify(const Flags &f, const OptionSet &o) {
    std::string trace;
    if (!f.trace.empty()) {
        trace = read_text_file(f.trace);
    } else {
        qccd_result *res = nullptr;
        std::string cfg = point_json(f, o).dump();
        qccd_status s = qccd_compile(cfg.c_str(), &res);
        if (s != QCCD_OK) {
            return report_failure(s);
        }
        trace = qccd_result_trace(res);
        qccd_result_free(res);
    }
    qccd_status s = qccd_verify_trace(trace.c_str());
    if (s != QCCD_OK) {
        std::fprintf(stderr, "violation: %s\n", qccd_last_error());
        return 1;
    }
    std::puts("clean");
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compile QEC memory experiments onto trapped-ion QCCD devices"};
    app.require_subcommand(1);
    Flags f;

    auto *compile = app.add_subcommand("compile", "compile one configuration and write its artifacts");
    OptionSet co = add_config_flags(compile, f, false);
    compile->add_option("--out", f.out, "output directory")->envname("QCCD_OUT");

    auto *sweep = app.add_subcommand("sweep", "compile a grid of configurations; lists are comma separated");
    OptionSet so = add_config_flags(sweep, f, true);
    sweep->add_option("--out", f.out, "output directory")->envname("QCCD_OUT");
    sweep->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber)->envname("QCCD_JOBS");

    auto *verify = app.add_subcommand("verify", "replay a trace through the invariant checkers");
    OptionSet vo = add_config_flags(verify, f, false);
    verify->add_option("--trace", f.trace, "trace.jsonl to check instead of compiling");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*compile) {
            return run_compile(f, co);
        }
        if (*sweep) {
            return run_sweep(f, so);
        }
        return run_verify(f, vo);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
