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


#include "qccd/emit.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qccd {

namespace {

std::string channel_line(const Channel &c) {
    std::string line = channel_stim_name(c.kind) + "(" + format_probability(c.p) + ") " + std::to_string(c.q0);
    if (c.q1 >= 0) {
        line += " " + std::to_string(c.q1);
    }
    return line;
}

std::string gate_line(const Gate &g) {
    std::string line = gate_kind_name(g.kind) + " " + std::to_string(g.q0);
    if (g.q1 >= 0) {
        line += " " + std::to_string(g.q1);
    }
    return line;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

std::string num(double v) {
    std::ostringstream o;
    o.precision(10);
    o << v;
    return o.str();
}

}  // namespace

std::string format_probability(double p) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p);
    if (ec != std::errc()) {
        throw std::runtime_error("cannot format probability");
    }
    return std::string(buf, ptr);
}

std::string to_stim(const StimInput &in, const StimOptions &options) {
    const auto &gates = in.logical.gates;
    const auto &ops = in.stream.ops;
    const size_t n_gates = gates.size();
    if (in.schedule.start.size() != ops.size()) {
        throw std::invalid_argument("schedule does not match the op stream");
    }

    // Stream op -> logical gate, and the scheduled anchor of each gate.
    const double none = -std::numeric_limits<double>::infinity();
    std::vector<int> gate_of(ops.size(), -1);
    std::vector<double> anchor(n_gates, none);
    std::vector<std::vector<int>> ion_gate_ops(in.stream.num_ions);
    for (size_t i = 0; i < ops.size(); i++) {
        const StreamOp &op = ops[i];
        if (op.native < 0) {
            continue;
        }
        int g = in.native.ops.at(op.native).source_gate;
        if (g < 0 || g >= (int)n_gates) {
            throw std::invalid_argument("native op without a source gate");
        }
        gate_of[i] = g;
        double t = in.schedule.start[i];
        if (gates[g].kind == GateKind::cx) {
            if (op.kind == OpKind::ms) {
                anchor[g] = t;
            }
        } else if (anchor[g] == none || t < anchor[g]) {
            anchor[g] = t;
        }
        for (int ion : {op.ion0, op.ion1}) {
            if (ion >= 0) {
                ion_gate_ops[ion].push_back((int)i);
            }
        }
    }
    // Keys never decrease along a qubit, so per-qubit gate order survives the sort.
    std::vector<double> key(n_gates);
    std::vector<double> last_key(in.logical.num_qubits, none);
    for (size_t g = 0; g < n_gates; g++) {
        double k = anchor[g];
        for (int q : {gates[g].q0, gates[g].q1}) {
            if (q >= 0) {
                k = std::max(k, last_key[q]);
            }
        }
        for (int q : {gates[g].q0, gates[g].q1}) {
            if (q >= 0) {
                last_key[q] = k;
            }
        }
        key[g] = k;
    }
    std::vector<int> order(n_gates);
    for (size_t g = 0; g < n_gates; g++) {
        order[g] = (int)g;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

    std::vector<std::vector<const Channel *>> before(n_gates), after(n_gates);
    std::vector<const Channel *> tail;
    if (options.noise) {
        for (const Channel &c : in.noisy.channels) {
            int g = gate_of.at(c.op);
            if (g >= 0) {
                (c.before ? before : after)[g].push_back(&c);
                continue;
            }
            // Gate swaps: attach before the next gate on either ion.
            int next = std::numeric_limits<int>::max();
            for (int ion : {ops[c.op].ion0, ops[c.op].ion1}) {
                if (ion < 0) {
                    continue;
                }
                const auto &list = ion_gate_ops[ion];
                auto it = std::upper_bound(list.begin(), list.end(), c.op);
                if (it != list.end()) {
                    next = std::min(next, *it);
                }
            }
            if (next == std::numeric_limits<int>::max()) {
                tail.push_back(&c);
            } else {
                before[gate_of[next]].push_back(&c);
            }
        }
    }

    std::ostringstream out;
    for (const auto &q : in.layout.qubits) {
        out << "QUBIT_COORDS(" << q.pos.x << ", " << q.pos.y << ") " << q.id << '\n';
    }
    std::vector<int> meas_index(n_gates, -1);
    int n_meas = 0;
    for (int g : order) {
        for (const Channel *c : before[g]) {
            out << channel_line(*c) << '\n';
        }
        out << gate_line(gates[g]) << '\n';
        if (gates[g].kind == GateKind::measure) {
            meas_index[g] = n_meas++;
        }
        for (const Channel *c : after[g]) {
            out << channel_line(*c) << '\n';
        }
    }
    for (const Channel *c : tail) {
        out << channel_line(*c) << '\n';
    }
    if (!options.detectors) {
        return out.str();
    }

    const int rounds = in.logical.rounds;
    const size_t nq = in.layout.num_qubits();
    if (rounds < 1) {
        throw std::invalid_argument("detectors need a memory experiment with at least one round");
    }
    // meas[r][q]: measurement of q in round r; row `rounds` holds the final readout.
    std::vector<std::vector<int>> meas(rounds + 1, std::vector<int>(nq, -1));
    for (size_t g = 0; g < n_gates; g++) {
        if (gates[g].kind != GateKind::measure) {
            continue;
        }
        int r = gates[g].round < 0 ? rounds : gates[g].round;
        if (r > rounds || meas[r][gates[g].q0] >= 0) {
            throw std::invalid_argument("circuit is not a memory experiment");
        }
        meas[r][gates[g].q0] = meas_index[g];
    }
    for (int r = 0; r <= rounds; r++) {
        for (size_t q = 0; q < nq; q++) {
            bool expect = r < rounds ? in.layout.is_ancilla((int)q) : !in.layout.is_ancilla((int)q);
            if (expect != (meas[r][q] >= 0)) {
                throw std::invalid_argument("circuit is not a memory experiment");
            }
        }
    }
    auto rec = [&](int idx) { return " rec[" + std::to_string(idx - n_meas) + "]"; };
    auto coords = [&](int q, int t) {
        const auto &p = in.layout.qubits[q].pos;
        return "DETECTOR(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(t) + ")";
    };
    for (int r = 0; r < rounds; r++) {
        for (const Cell &cell : in.layout.cells) {
            int a = cell.ancilla;
            if (r == 0) {
                if (in.layout.qubits[a].role == QubitRole::ancilla_z) {
                    out << coords(a, 0) << rec(meas[0][a]) << '\n';
                }
                continue;
            }
            out << coords(a, r) << rec(meas[r - 1][a]) << rec(meas[r][a]) << '\n';
        }
    }
    for (const Cell &cell : in.layout.cells) {
        int a = cell.ancilla;
        if (in.layout.qubits[a].role != QubitRole::ancilla_z) {
            continue;
        }
        out << coords(a, rounds) << rec(meas[rounds - 1][a]);
        for (int q : cell.data) {
            out << rec(meas[rounds][q]);
        }
        out << '\n';
    }
    out << "OBSERVABLE_INCLUDE(0)";
    for (int q : in.layout.logical_z) {
        out << rec(meas[rounds][q]);
    }
    out << '\n';
    return out.str();
}

std::string report_header() {
    return "code,distance,capacity,topology,wiring,improvement,rounds,cooling,status,elapsed_per_round_us,"
           "movement_time_us,n_movement_ops,n_gate_swaps,makespan_us,n_electrodes,n_dacs,data_rate_mbit_s,power_mw,"
           "stim_path,error";
}

std::string report_line(const ReportRow &row) {
    const CompileConfig &c = row.config;
    const bool ok = row.error.empty();
    std::ostringstream o;
    o << code_kind_name(c.code) << ',' << c.distance << ',' << c.capacity << ',' << topology_name(c.topology) << ','
      << wiring_name(c.wiring) << ',' << num(c.improvement) << ',' << c.effective_rounds() << ','
      << (c.cooling ? 1 : 0) << ',' << (ok ? "ok" : "failed") << ',';
    if (ok) {
        const Metrics &m = row.metrics;
        const ResourceEstimate &e = row.resources;
        o << num(m.elapsed_per_round) << ',' << num(m.movement_time) << ',' << m.n_movement_ops << ','
          << m.n_gate_swaps << ',' << num(m.makespan) << ',' << e.n_electrodes << ',' << num(e.n_dacs) << ','
          << e.data_rate_mbit_s << ',' << e.power_mw << ',';
    } else {
        o << ",,,,,,,,,";
    }
    o << csv_field(row.stim_path) << ',' << csv_field(row.error);
    return o.str();
}

std::string report_csv(const std::vector<ReportRow> &rows) {
    std::string out = report_header() + "\n";
    for (const auto &r : rows) {
        out += report_line(r) + "\n";
    }
    return out;
}

void write_file_atomic(const std::string &path, const std::string &content) {
    static std::atomic<unsigned> counter{0};
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000) + "_" +
           std::to_string(counter++);
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        f << content;
        f.flush();
        if (!f) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename into " + target.string() + ": " + ec.message());
    }
}

}  // namespace qccd
