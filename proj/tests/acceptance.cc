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


// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/dense.h"
#include "oracles/random_instance.h"
#include "oracles/replay.h"
#include "qccd/compile.h"

using namespace qccd;

namespace {

constexpr double kPlateauTarget = 4085;
constexpr double kPlateauBand = 0.20;
constexpr double kPlateauSpread = 0.01;
constexpr double kPlateauSeconds = 60;
constexpr double kRoutingSlack = 1.35;
constexpr double kElapsedSlack = 1.15;
constexpr double kLinearOverGrid = 10;
constexpr double kGridVsSwitch = 0.15;
constexpr int kRouterTrials = 1000;
constexpr double kWiseSaving = 100;
constexpr int64_t kWiseFloor = 20000;
constexpr double kUnitaryTol = 1e-10;
constexpr double kDephasingTol = 1e-12;

int failures = 0;

void report(int id, bool ok, const std::string &detail) {
    std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

std::string fmt(const char *f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

CompileResult run(const std::string &tuple, int rounds = 5, Wiring w = Wiring::standard, double f = 1) {
    CompileConfig c = parse_config_tuple(tuple);
    c.rounds = rounds;
    c.wiring = w;
    c.improvement = f;
    return compile(c);
}

void plateau() {
    auto t0 = std::chrono::steady_clock::now();
    double lo = 1e300, hi = 0;
    std::string detail;
    bool band = true;
    for (int d : {3, 6, 12}) {
        double e = run("S," + std::to_string(d) + ",2,G").metrics.elapsed_per_round;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        band = band && std::abs(e / kPlateauTarget - 1) <= kPlateauBand;
        detail += fmt("d=%.0f %.1fus  ", d, e);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double spread = (hi - lo) / lo;
    detail += fmt("spread %.4f%%  runtime %.1fs", 100 * spread, secs);
    report(1, band && spread <= kPlateauSpread && secs < kPlateauSeconds, detail);
}

void single_chain() {
    bool ok = true;
    std::string detail;
    for (int d : {3, 6}) {
        auto m = run("R," + std::to_string(d) + ",2,C").metrics;
        ok = ok && m.n_movement_ops == 0;
        detail += fmt("d=%.0f moves=%.0f  ", d, m.n_movement_ops);
    }
    report(2, ok, detail);
}

void routing_ops() {
    const int rounds = 5;
    bool ok = true;
    std::string detail;
    for (auto [tuple, minimum] : {std::pair{"R,3,2,L", 18}, {"R,6,2,L", 60}, {"S,3,2,G", 288}}) {
        double per_round = (double)run(tuple, rounds).metrics.n_movement_ops / rounds;
        double ratio = per_round / minimum;
        ok = ok && ratio >= 1 && ratio <= kRoutingSlack;
        detail += std::string(tuple) + fmt(" %.0f/%.0f=%.3f  ", per_round, minimum, ratio);
    }
    report(3, ok, detail);
}

// One trap serializes everything: the round span is at least the summed
// duration of the round's gates.
double chain_bound(const CompileResult &r) {
    double sum = 0;
    for (const auto &op : r.stream.ops) {
        if (op.round >= 0) {
            sum += r.schedule_options.timing.duration(op.kind, r.schedule_options.cooling);
        }
    }
    return sum / r.metrics.rounds;
}

// Capacity 2: each ancilla runs its own gates back to back and, per MS,
// leaves its trap and comes back through one junction.
double capacity_two_bound(const CompileResult &r) {
    const TimingTable &t = r.schedule_options.timing;
    const double hop = t.split + 2 * t.shuttle + t.junction_entry + t.junction_exit + t.merge;
    std::map<int, double> work;
    for (const auto &op : r.native.ops) {
        int g = op.source_gate;
        if (r.logical.gates[g].round < 0) {
            continue;
        }
        double dur = t.duration(op_kind_of(op.kind), r.schedule_options.cooling);
        for (int q : {op.q0, op.q1}) {
            if (q >= 0 && r.layout.is_ancilla(q)) {
                work[q] += dur + (op.kind == NativeKind::ms ? 2 * hop : 0);
            }
        }
    }
    double best = 0;
    for (auto &[q, w] : work) {
        best = std::max(best, w);
    }
    return best / r.metrics.rounds;
}

void near_optimal() {
    bool ok = true;
    double worst = 0, total = 0;
    int n = 0;
    std::string detail;
    auto check = [&](const std::string &tuple, double (*bound)(const CompileResult &)) {
        CompileResult r = run(tuple);
        double b = bound(r);
        double ratio = r.metrics.elapsed_per_round / b;
        ok = ok && ratio >= 1 - 1e-9 && ratio <= kElapsedSlack;
        worst = std::max(worst, ratio);
        total += ratio;
        n++;
        detail += tuple + fmt(" %.3f  ", ratio);
    };
    for (const char *t : {"R,3,2,C", "R,6,2,C", "S,3,2,C", "S,5,2,C"}) {
        check(t, chain_bound);
    }
    for (const char *t : {"S,3,2,G", "S,4,2,G", "S,5,2,G", "S,3,2,W", "S,5,2,W"}) {
        check(t, capacity_two_bound);
    }
    detail += fmt("mean %.3f worst %.3f", total / n, worst);
    report(4, ok, detail);
}

void topology_order() {
    double grid = run("S,5,2,G").metrics.elapsed_per_round;
    double lin = run("S,5,2,L").metrics.elapsed_per_round;
    double sw = run("S,5,2,W").metrics.elapsed_per_round;
    bool ok = lin >= kLinearOverGrid * grid && std::abs(grid - sw) <= kGridVsSwitch * grid;
    report(5, ok, fmt("grid %.1fus linear %.1fus (x%.2f) switch %.1fus", grid, lin, lin / grid, sw));
}

void router_safety() {
    std::mt19937 rng(20260101);
    oracle::ReplayReport rep;
    int unroutable = 0, checker = 0;
    for (int trial = 0; trial < kRouterTrials; trial++) {
        oracle::Instance in = oracle::random_instance(rng);
        OpStream s;
        try {
            s = route_circuit({in.native, in.device, in.chains, in.mobile, {}});
        } catch (const RoutingError &) {
            unroutable++;
            continue;
        }
        checker += !check_stream(s, in.device).empty();
        oracle::replay_stream(s, in.device, rep);
        for (Wiring w : {Wiring::standard, Wiring::wise}) {
            ScheduleOptions o;
            o.wiring = w;
            Schedule sch = build_schedule(s, in.device, o);
            checker += !check_schedule(s, sch, in.device, o).empty();
            oracle::replay_schedule(s, sch, in.device, rep);
        }
    }
    std::ostringstream d;
    d << kRouterTrials << " instances, unroutable " << unroutable << ", capacity " << rep.capacity
      << ", exclusivity " << rep.exclusivity << ", pass " << rep.pass_boundary << ", co-location " << rep.colocation
      << ", happens-before " << rep.happens_before << ", adjacency " << rep.adjacency << ", checker " << checker;
    report(6, unroutable == 0 && rep.total() == 0 && checker == 0, d.str());
}

void resource_identities() {
    std::mt19937 rng(7);
    bool ok = true;
    for (int i = 0; i < 50; i++) {
        DeviceCounts c;
        c.n_traps = 1 + (int)(rng() % 5000);
        c.capacity = 1 + (int)(rng() % 40);
        c.n_junctions = (int)(rng() % 5000);
        for (Wiring w : {Wiring::standard, Wiring::wise}) {
            ResourceEstimate e = estimate(c, w);
            int64_t hand = 20LL * c.n_traps * c.capacity + 30LL * c.n_junctions;
            ok = ok && e.n_electrodes == hand && e.power_mw * 5 == e.data_rate_mbit_s * 3;
        }
    }
    DeviceCounts big;
    big.n_traps = 1300;
    big.capacity = 1;
    ResourceEstimate e = estimate(big, Wiring::standard);
    bool fixed = e.n_electrodes == 26000 && e.power_mw == 780000 && e.data_rate_mbit_s == 1300000;
    report(7, ok && fixed,
           fmt("50 triples exact, W/(Gbit/s)=0.6; %.0f electrodes -> %.0f W, %.1f Tbit/s", e.n_electrodes,
               e.power_mw / 1e3, e.data_rate_mbit_s / 1e6));
}

void wise() {
    int points = 0, overlaps = 0, slower = 0;
    double min_saving = 1e300;
    int large = 0, short_saving = 0;
    for (CodeKind code : {CodeKind::rotated_surface, CodeKind::repetition}) {
        for (int d : {3, 5}) {
            for (int cap : {2, 3, 5}) {
                for (Topology topo : {Topology::grid, Topology::linear, Topology::switch_star}) {
                    CompileConfig c;
                    c.code = code;
                    c.distance = d;
                    c.capacity = cap;
                    c.topology = topo;
                    c.rounds = 2;
                    CompileResult s = compile(c);
                    c.wiring = Wiring::wise;
                    CompileResult w = compile(c);
                    points++;
                    oracle::ReplayReport rep;
                    oracle::replay_schedule(w.stream, w.schedule, w.device, rep);
                    std::string why = check_schedule(w.stream, w.schedule, w.device, w.schedule_options);
                    overlaps += !why.empty() || rep.total() > 0;
                    slower += w.metrics.elapsed_per_round < s.metrics.elapsed_per_round - 1e-9;
                }
            }
        }
    }
    // Data rate at scale, over device sizes the sweep grid reaches.
    const std::vector<std::pair<CodeKind, std::vector<int>>> scan{
        {CodeKind::rotated_surface, {5, 9, 13, 15, 17, 19, 21, 25}},
        {CodeKind::repetition, {101, 251, 501, 751, 1001, 2001}}};
    for (const auto &[code, distances] : scan) {
        for (int d : distances) {
            CodeLayout layout = build_layout(code, d);
            for (int cap : {2, 3, 5, 12, 20}) {
                for (Topology topo : {Topology::grid, Topology::linear, Topology::switch_star}) {
                    DeviceCounts counts = device_for_code(layout, cap, topo).counts();
                    ResourceEstimate s = estimate(counts, Wiring::standard);
                    if (s.n_electrodes < kWiseFloor) {
                        continue;
                    }
                    ResourceEstimate w = estimate(counts, Wiring::wise);
                    double saving = (double)s.data_rate_mbit_s / w.data_rate_mbit_s;
                    large++;
                    min_saving = std::min(min_saving, saving);
                    short_saving += saving < kWiseSaving;
                }
            }
        }
    }
    std::ostringstream d;
    d << points << " points: " << overlaps << " kind overlaps, " << slower << " faster than standard; " << large
      << " devices >= 2e4 electrodes, min saving x" << min_saving << ", " << short_saving << " below x100";
    report(8, overlaps == 0 && slower == 0 && large > 0 && short_saving == 0, d.str());
}

void translation() {
    std::mt19937 rng(9);
    double worst = 0;
    for (int trial = 0; trial < 100; trial++) {
        LogicalCircuit c;
        c.num_qubits = 1 + (int)(rng() % 3);
        int len = 1 + (int)(rng() % 12);
        for (int i = 0; i < len; i++) {
            Gate g;
            g.q0 = (int)(rng() % c.num_qubits);
            if (c.num_qubits > 1 && rng() % 2) {
                g.kind = GateKind::cx;
                do {
                    g.q1 = (int)(rng() % c.num_qubits);
                } while (g.q1 == g.q0);
            } else {
                g.kind = GateKind::h;
            }
            c.gates.push_back(g);
        }
        oracle::Unitary want(c.num_qubits), got(c.num_qubits);
        for (const auto &g : c.gates) {
            g.kind == GateKind::h ? want.h(g.q0) : want.cx(g.q0, g.q1);
        }
        for (const auto &op : peephole_merge(decompose(c)).ops) {
            switch (op.kind) {
                case NativeKind::ms:
                    got.ms(op.q0, op.q1, op.angle);
                    break;
                case NativeKind::rx:
                    got.rx(op.q0, op.angle);
                    break;
                case NativeKind::ry:
                    got.ry(op.q0, op.angle);
                    break;
                case NativeKind::rz:
                    got.rz(op.q0, op.angle);
                    break;
                default:
                    break;
            }
        }
        worst = std::max(worst, oracle::phase_distance(got, want));
    }
    report(9, worst <= kUnitaryTol, fmt("100 circuits, worst entry deviation %.2e", worst));
}

// Probabilities of every noise line, in file order.
std::vector<double> stim_probabilities(const std::string &text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        for (const char *name : {"X_ERROR(", "Z_ERROR(", "DEPOLARIZE1(", "DEPOLARIZE2("}) {
            if (line.rfind(name, 0) == 0) {
                out.push_back(std::stod(line.substr(std::string(name).size())));
            }
        }
    }
    return out;
}

void noise_spot_checks() {
    NoiseParams p;
    double deph = dephasing_prob(2.2e6, p);
    bool ok = std::abs(deph - (1 - std::exp(-1.0)) / 2) <= kDephasingTol;
    std::string grid_stim = run("S,3,2,G", 2).stim;
    ok = ok && grid_stim.find("X_ERROR(0.005) ") != std::string::npos &&
         grid_stim.find("X_ERROR(0.001) ") != std::string::npos;
    int compared = 0, clamped = 0, off = 0, chain_clamped = 0;
    for (const char *t : {"R,3,2,C", "S,3,2,G"}) {
        auto a = stim_probabilities(run(t, 2, Wiring::standard, 1).stim);
        auto b = stim_probabilities(run(t, 2, Wiring::standard, 10).stim);
        if (a.size() != b.size()) {
            off++;
            continue;
        }
        for (size_t i = 0; i < a.size(); i++) {
            // Saturated depolarizing channels cannot scale.
            if (a[i] >= 0.75) {
                clamped++;
                chain_clamped += std::string(t) == "R,3,2,C";
                continue;
            }
            compared++;
            off += std::abs(b[i] * 10 - a[i]) > 1e-12 * a[i];
        }
    }
    ok = ok && off == 0 && chain_clamped == 0;
    std::ostringstream d;
    d.precision(15);
    d << "dephasing(2.2s)=" << deph << "; table flips verbatim; f=10: " << compared << " channels /10 exactly, "
      << off << " off, " << clamped << " saturated at f=1 (grid only)";
    report(10, ok, d.str());
}

}  // namespace

int main() {
    const std::pair<int, std::function<void()>> checks[] = {
        {1, plateau},   {2, single_chain},        {3, routing_ops}, {4, near_optimal}, {5, topology_order},
        {6, router_safety}, {7, resource_identities}, {8, wise},        {9, translation},  {10, noise_spot_checks},
    };
    for (const auto &[id, fn] : checks) {
        try {
            fn();
        } catch (const std::exception &e) {
            report(id, false, std::string("threw: ") + e.what());
        }
    }
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
