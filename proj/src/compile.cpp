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


#include "qccd/compile.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace qccd {

CompileResult compile(const CompileConfig &config, const StimOptions &stim) {
    config.validate();
    CompileResult r;
    r.config = config;
    r.config.noise.improvement = config.improvement;
    r.config.noise.cooling = config.cooling;
    const int rounds = config.effective_rounds();

    r.layout = build_layout(config.code, config.distance);
    r.logical = generate_memory_experiment(r.layout, rounds);
    r.native = peephole_merge(decompose(r.logical));

    r.device = device_for_code(r.layout, config.capacity, config.topology, config.wiring);
    r.clustering = cluster_qubits(r.layout, interaction_graph(generate_round(r.layout)), r.device.spec().capacity);
    r.mapping = map_clusters(r.clustering, r.layout, r.device);
    validate_mapping(r.mapping, r.device);

    std::vector<bool> mobile(r.layout.num_qubits());
    for (size_t q = 0; q < mobile.size(); q++) {
        mobile[q] = r.layout.is_ancilla((int)q);
    }
    std::vector<int> native_round;
    native_round.reserve(r.native.ops.size());
    for (const auto &op : r.native.ops) {
        native_round.push_back(r.logical.gates.at(op.source_gate).round);
    }
    RouteInput in{r.native, r.device, chains_from_mapping(r.mapping, r.device), mobile, native_round};
    r.stream = route_circuit(in);

    r.schedule_options.wiring = config.wiring;
    r.schedule_options.timing = config.timing;
    r.schedule_options.cooling = config.cooling;
    r.schedule = build_schedule(r.stream, r.device, r.schedule_options);
    r.metrics = metrics(r.schedule, r.stream, rounds);

    r.heating = accumulate_heating(r.stream, r.device, r.config.noise);
    r.noisy = annotate(r.stream, r.schedule, r.heating, r.schedule_options, r.config.noise);
    r.resources = estimate(r.device.counts(), config.wiring);
    r.stim = to_stim({r.layout, r.logical, r.native, r.stream, r.schedule, r.noisy}, stim);
    return r;
}

std::string trace_jsonl(const CompileResult &r) {
    std::ostringstream out;
    auto header = stream_header_json(r.stream);
    header["wiring"] = wiring_name(r.schedule_options.wiring);
    header["timing_us"] = timing_to_json(r.schedule_options.timing);
    header["cooling"] = r.schedule_options.cooling;
    out << header.dump() << '\n';
    for (size_t i = 0; i < r.stream.ops.size(); i++) {
        auto j = stream_op_json(r.stream.ops[i]);
        j["start_us"] = r.schedule.start[i];
        j["end_us"] = r.schedule.end[i];
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string write_artifacts(const CompileResult &r, const std::string &dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path base(dir);
    std::string stim_path = (base / "circuit.stim").string();
    write_file_atomic(stim_path, r.stim);
    write_file_atomic((base / "trace.jsonl").string(), trace_jsonl(r));
    write_file_atomic((base / "gantt.csv").string(), gantt_csv(r.stream, r.schedule));
    nlohmann::json m = metrics_to_json(r.metrics);
    m["resources"] = resources_to_json(r.resources);
    m["tuple"] = format_config_tuple(r.config);
    write_file_atomic((base / "metrics.json").string(), m.dump(2) + "\n");
    write_file_atomic((base / "config.json").string(), config_to_json(r.config).dump(2) + "\n");
    ReportRow row{r.config, "", r.metrics, r.resources, stim_path};
    write_file_atomic((base / "metrics.csv").string(), report_csv({row}));
    return stim_path;
}

std::string verify_trace(const std::string &jsonl) {
    std::istringstream in(jsonl);
    std::string line;
    OpStream stream;
    ScheduleOptions opts;
    Schedule sched;
    bool have_header = false;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            auto j = nlohmann::json::parse(line);
            if (j.value("type", "") == "header") {
                stream.device = device_spec_from_json(j.at("device"));
                stream.num_ions = j.at("num_ions").get<int>();
                stream.passes = j.value("passes", 0);
                opts.wiring = parse_wiring(j.value("wiring", wiring_name(stream.device.wiring)));
                if (j.contains("timing_us")) {
                    opts.timing = timing_from_json(j.at("timing_us"));
                }
                opts.cooling = j.value("cooling", false);
                have_header = true;
                stream.initial_chains.clear();
                for (auto &[key, ions] : j.at("chains").items()) {
                    size_t t = std::stoul(key);
                    if (stream.initial_chains.size() <= t) {
                        stream.initial_chains.resize(t + 1);
                    }
                    stream.initial_chains[t] = ions.get<std::vector<int>>();
                }
                continue;
            }
            stream.ops.push_back(stream_op_from_json(j));
            sched.start.push_back(j.at("start_us").get<double>());
            sched.end.push_back(j.at("end_us").get<double>());
            sched.makespan = std::max(sched.makespan, sched.end.back());
        }
    } catch (const std::exception &e) {
        return std::string("malformed trace: ") + e.what();
    }
    if (!have_header) {
        return "malformed trace: missing header";
    }
    QccdDevice device;
    try {
        device = build_device(stream.device);
    } catch (const std::exception &e) {
        return std::string("bad device: ") + e.what();
    }
    stream.initial_chains.resize(device.size());
    std::string err = check_stream(stream, device);
    if (!err.empty()) {
        return err;
    }
    return check_schedule(stream, sched, device, opts);
}

void SweepConfig::validate() const {
    if (codes.empty() || distances.empty() || capacities.empty() || topologies.empty() || wirings.empty() ||
        improvements.empty()) {
        throw std::invalid_argument("every sweep list must be non-empty");
    }
    if (jobs < 1) {
        throw std::invalid_argument("jobs must be at least 1");
    }
    for (int d : distances) {
        if (d < 2) {
            throw std::invalid_argument("distances must be at least 2");
        }
    }
}

std::vector<CompileConfig> SweepConfig::points() const {
    std::vector<CompileConfig> out;
    for (CodeKind code : codes) {
        for (Topology topo : topologies) {
            for (Wiring w : wirings) {
                for (int k : capacities) {
                    for (int d : distances) {
                        for (double f : improvements) {
                            CompileConfig c = base;
                            c.code = code;
                            c.topology = topo;
                            c.wiring = w;
                            c.capacity = k;
                            c.distance = d;
                            c.improvement = f;
                            out.push_back(c);
                        }
                    }
                }
            }
        }
    }
    return out;
}

nlohmann::json sweep_to_json(const SweepConfig &s) {
    nlohmann::json j;
    for (auto c : s.codes) {
        j["codes"].push_back(code_kind_name(c));
    }
    j["distances"] = s.distances;
    j["capacities"] = s.capacities;
    for (auto t : s.topologies) {
        j["topologies"].push_back(topology_name(t));
    }
    for (auto w : s.wirings) {
        j["wirings"].push_back(wiring_name(w));
    }
    j["improvements"] = s.improvements;
    j["base"] = config_to_json(s.base);
    j["out_dir"] = s.out_dir;
    j["jobs"] = s.jobs;
    return j;
}

SweepConfig sweep_from_json(const nlohmann::json &j) {
    SweepConfig s;
    if (j.contains("base")) {
        s.base = config_from_json(j.at("base"));
    }
    if (j.contains("rounds")) {
        s.base.rounds = j.at("rounds").get<int>();
    }
    if (j.contains("codes")) {
        s.codes.clear();
        for (const auto &c : j.at("codes")) {
            s.codes.push_back(parse_code_kind(c.get<std::string>()));
        }
    }
    if (j.contains("topologies")) {
        s.topologies.clear();
        for (const auto &t : j.at("topologies")) {
            s.topologies.push_back(parse_topology(t.get<std::string>()));
        }
    }
    if (j.contains("wirings")) {
        s.wirings.clear();
        for (const auto &w : j.at("wirings")) {
            s.wirings.push_back(parse_wiring(w.get<std::string>()));
        }
    }
    s.distances = j.value("distances", s.distances);
    s.capacities = j.value("capacities", s.capacities);
    s.improvements = j.value("improvements", s.improvements);
    s.out_dir = j.value("out_dir", s.out_dir);
    s.jobs = j.value("jobs", s.jobs);
    s.validate();
    return s;
}

std::string point_name(const CompileConfig &c) {
    std::ostringstream o;
    o << code_letter(c.code) << "_d" << c.distance << "_k" << c.capacity << "_" << topology_letter(c.topology) << "_"
      << wiring_name(c.wiring) << "_f" << c.improvement;
    if (c.cooling) {
        o << "_cooled";
    }
    return o.str();
}

std::vector<ReportRow> run_sweep(const SweepConfig &sweep) {
    sweep.validate();
    std::vector<CompileConfig> pts = sweep.points();
    std::vector<ReportRow> rows(pts.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < pts.size(); i = next++) {
            ReportRow &row = rows[i];
            row.config = pts[i];
            try {
                CompileResult r = compile(pts[i]);
                row.metrics = r.metrics;
                row.resources = r.resources;
                if (!sweep.out_dir.empty()) {
                    auto dir = std::filesystem::path(sweep.out_dir) / point_name(pts[i]);
                    row.stim_path = write_artifacts(r, dir.string());
                }
            } catch (const std::exception &e) {
                row.error = e.what();
                if (row.error.empty()) {
                    row.error = "unknown failure";
                }
            }
        }
    };
    int jobs = std::min<int>(sweep.jobs, (int)std::max<size_t>(pts.size(), 1));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; j++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    auto key = [](const ReportRow &r) {
        const auto &c = r.config;
        return std::make_tuple((int)c.code, (int)c.topology, (int)c.wiring, c.capacity, c.distance, c.improvement);
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const ReportRow &a, const ReportRow &b) { return key(a) < key(b); });
    if (!sweep.out_dir.empty()) {
        std::filesystem::create_directories(sweep.out_dir);
        write_file_atomic((std::filesystem::path(sweep.out_dir) / "sweep.csv").string(), report_csv(rows));
    }
    return rows;
}

}  // namespace qccd
