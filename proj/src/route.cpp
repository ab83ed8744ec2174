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

#include "qccd/route.h"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

namespace qccd {

std::string op_kind_name(OpKind kind) {
    switch (kind) {
        case OpKind::ms:
            return "MS";
        case OpKind::rx:
            return "RX";
        case OpKind::ry:
            return "RY";
        case OpKind::rz:
            return "RZ";
        case OpKind::measure:
            return "Measure";
        case OpKind::reset:
            return "Reset";
        case OpKind::split:
            return "Split";
        case OpKind::merge:
            return "Merge";
        case OpKind::shuttle:
            return "Shuttle";
        case OpKind::junction_entry:
            return "JunctionEntry";
        case OpKind::junction_exit:
            return "JunctionExit";
        case OpKind::gate_swap:
            return "GateSwap";
    }
    return "?";
}

OpKind parse_op_kind(const std::string &text) {
    for (int k = 0; k <= (int)OpKind::gate_swap; k++) {
        if (op_kind_name((OpKind)k) == text) {
            return (OpKind)k;
        }
    }
    throw std::invalid_argument("unknown op kind '" + text + "'");
}

OpKind op_kind_of(NativeKind kind) {
    switch (kind) {
        case NativeKind::ms:
            return OpKind::ms;
        case NativeKind::rx:
            return OpKind::rx;
        case NativeKind::ry:
            return OpKind::ry;
        case NativeKind::rz:
            return OpKind::rz;
        case NativeKind::measure:
            return OpKind::measure;
        case NativeKind::reset:
            return OpKind::reset;
    }
    throw std::invalid_argument("unknown native kind");
}

bool is_movement(OpKind kind) {
    return kind >= OpKind::split;
}

bool is_transport(OpKind kind) {
    return kind >= OpKind::split && kind <= OpKind::junction_exit;
}

bool is_two_ion(OpKind kind) {
    return kind == OpKind::ms || kind == OpKind::gate_swap;
}

std::vector<int> StreamOp::components() const {
    if (!is_transport(kind)) {
        return {trap};
    }
    if (kind == OpKind::shuttle) {
        return {from};
    }
    return {from, to};
}

RoutingState::RoutingState(const QccdDevice &device, const std::vector<std::vector<int>> &chains, int num_ions)
    : device_(device),
      location_(num_ions, -1),
      chains_(device.size()),
      occupancy_(device.size(), 0),
      shuttled_(num_ions, false) {
    for (size_t c = 0; c < chains.size() && c < device.size(); c++) {
        if (!chains[c].empty() && !device.is_trap((int)c)) {
            throw std::invalid_argument("initial ions outside a trap");
        }
        chains_[c] = chains[c];
        occupancy_[c] = (int)chains[c].size();
        if (occupancy_[c] > device.at((int)c).capacity) {
            throw std::invalid_argument("initial chain exceeds trap capacity");
        }
        for (int ion : chains[c]) {
            if (ion < 0 || ion >= num_ions || location_[ion] != -1) {
                throw std::invalid_argument("bad or duplicate ion in initial chains");
            }
            location_[ion] = (int)c;
        }
    }
    for (int ion = 0; ion < num_ions; ion++) {
        if (location_[ion] < 0) {
            throw std::invalid_argument("ion " + std::to_string(ion) + " has no initial trap");
        }
    }
}

void RoutingState::apply(const StreamOp &op) {
    auto fail = [&](const std::string &what) {
        throw RoutingViolation(op.id, op_kind_name(op.kind) + " " + what);
    };
    auto check_ion = [&](int ion) {
        if (ion < 0 || ion >= (int)location_.size()) {
            fail("names unknown ion " + std::to_string(ion));
        }
    };
    auto check_component = [&](int c) {
        if (c < 0 || c >= (int)device_.size()) {
            fail("names unknown component " + std::to_string(c));
        }
    };
    check_ion(op.ion0);
    if (is_two_ion(op.kind)) {
        check_ion(op.ion1);
        if (op.ion0 == op.ion1) {
            fail("needs two distinct ions");
        }
    }
    if (!is_transport(op.kind)) {
        check_component(op.trap);
        if (!device_.is_trap(op.trap)) {
            fail("runs outside a trap");
        }
        if (location_[op.ion0] != op.trap || (is_two_ion(op.kind) && location_[op.ion1] != op.trap)) {
            fail("ions are not co-located in trap " + std::to_string(op.trap));
        }
        if (op.kind == OpKind::gate_swap) {
            auto &ch = chains_[op.trap];
            auto a = std::find(ch.begin(), ch.end(), op.ion0) - ch.begin();
            auto b = std::find(ch.begin(), ch.end(), op.ion1) - ch.begin();
            if (std::abs(a - b) != 1) {
                fail("swaps non-adjacent ions");
            }
            std::swap(ch[a], ch[b]);
        }
        return;
    }
    check_component(op.from);
    check_component(op.to);
    const int ion = op.ion0;
    if (location_[ion] != op.from) {
        fail("ion " + std::to_string(ion) + " is not in component " + std::to_string(op.from));
    }
    const Component &src = device_.at(op.from);
    const Component &dst = device_.at(op.to);
    auto adjacent = [&](int seg, int node) {
        const Component &s = device_.at(seg);
        return s.kind == ComponentKind::segment && (s.a == node || s.b == node);
    };
    switch (op.kind) {
        case OpKind::split: {
            if (src.kind != ComponentKind::trap || !adjacent(op.to, op.from)) {
                fail("must leave a trap into an attached segment");
            }
            auto &ch = chains_[op.from];
            TrapEnd end = device_.end_of(op.from, op.to);
            int at_end = end == TrapEnd::left ? ch.front() : ch.back();
            if (at_end != ion) {
                fail("ion " + std::to_string(ion) + " is not at the chain end facing the segment");
            }
            if (occupancy_[op.to] >= 1) {
                fail("enters occupied segment " + std::to_string(op.to));
            }
            if (end == TrapEnd::left) {
                ch.erase(ch.begin());
            } else {
                ch.pop_back();
            }
            break;
        }
        case OpKind::shuttle:
            if (src.kind != ComponentKind::segment || op.to != op.from) {
                fail("must stay on one segment");
            }
            if (shuttled_[ion]) {
                fail("crosses the same segment twice");
            }
            shuttled_[ion] = true;
            return;
        case OpKind::junction_entry:
            if (dst.kind != ComponentKind::junction || !adjacent(op.from, op.to)) {
                fail("must enter an attached junction");
            }
            if (occupancy_[op.to] >= dst.capacity) {
                fail("enters full junction " + std::to_string(op.to));
            }
            break;
        case OpKind::junction_exit:
            if (src.kind != ComponentKind::junction || !adjacent(op.to, op.from)) {
                fail("must leave a junction into an attached segment");
            }
            if (occupancy_[op.to] >= 1) {
                fail("enters occupied segment " + std::to_string(op.to));
            }
            break;
        case OpKind::merge: {
            if (dst.kind != ComponentKind::trap || !adjacent(op.from, op.to)) {
                fail("must enter a trap from an attached segment");
            }
            if (occupancy_[op.to] >= dst.capacity) {
                fail("overfills trap " + std::to_string(op.to));
            }
            auto &ch = chains_[op.to];
            if (device_.end_of(op.to, op.from) == TrapEnd::left) {
                ch.insert(ch.begin(), ion);
            } else {
                ch.push_back(ion);
            }
            break;
        }
        default:
            fail("is not a transport");
    }
    if (src.kind == ComponentKind::segment && !shuttled_[ion]) {
        fail("leaves segment " + std::to_string(op.from) + " without shuttling across it");
    }
    if (dst.kind == ComponentKind::segment) {
        shuttled_[ion] = false;
    }
    occupancy_[op.from]--;
    occupancy_[op.to]++;
    location_[ion] = op.to;
}

void RoutingState::check_pass_boundary(int op_id) const {
    for (size_t c = 0; c < device_.size(); c++) {
        const Component &comp = device_.at((int)c);
        if (comp.kind != ComponentKind::trap && occupancy_[c] > 0) {
            throw RoutingViolation(op_id, "pass ends with an ion in component " + std::to_string(c));
        }
        if (comp.kind == ComponentKind::trap && occupancy_[c] > comp.capacity - 1) {
            throw RoutingViolation(op_id, "pass ends with trap " + std::to_string(c) + " holding " +
                                              std::to_string(occupancy_[c]) + " ions");
        }
    }
}

std::vector<int> shortest_path(const QccdDevice &device, int src, int dst, const std::function<bool(int)> &allowed) {
    if (src == dst) {
        return {src};
    }
    if (!allowed(dst)) {
        return {};
    }
    // Distances to dst, then greedy smallest-id descent from src.
    std::vector<int> dist(device.size(), -1);
    std::queue<int> q;
    dist[dst] = 0;
    q.push(dst);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == src) {
            break;
        }
        for (int v : device.neighbours(u)) {
            if (dist[v] < 0 && (v == src || allowed(v))) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    if (dist[src] < 0) {
        return {};
    }
    std::vector<int> path{src};
    int cur = src;
    while (cur != dst) {
        int next = -1;
        for (int v : device.neighbours(cur)) {
            if (dist[v] == dist[cur] - 1 && v != src && (next < 0 || v < next)) {
                next = v;
            }
        }
        path.push_back(next);
        cur = next;
    }
    return path;
}

std::vector<std::vector<int>> chains_from_mapping(const Mapping &mapping, const QccdDevice &device) {
    std::vector<std::vector<std::pair<int, int>>> slots(device.size());
    for (size_t q = 0; q < mapping.qubit_trap.size(); q++) {
        slots[mapping.qubit_trap[q]].push_back({mapping.qubit_slot[q], (int)q});
    }
    std::vector<std::vector<int>> chains(device.size());
    for (size_t t = 0; t < slots.size(); t++) {
        std::sort(slots[t].begin(), slots[t].end());
        for (const auto &[slot, q] : slots[t]) {
            chains[t].push_back(q);
        }
    }
    return chains;
}

namespace {

class Router {
   public:
    explicit Router(const RouteInput &in)
        : in_(in),
          dev_(in.device),
          native_(in.native),
          state_(in.device, in.initial_chains, in.native.num_qubits),
          per_qubit_(in.native.num_qubits),
          ptr_(in.native.num_qubits, 0),
          reserved_(in.device.size(), 0) {
        stream_.device = dev_.spec();
        stream_.num_ions = native_.num_qubits;
        stream_.initial_chains = in.initial_chains;
        stream_.initial_chains.resize(dev_.size());
        for (size_t i = 0; i < native_.ops.size(); i++) {
            const NativeOp &op = native_.ops[i];
            per_qubit_[op.q0].push_back((int)i);
            if (op.q1 >= 0) {
                per_qubit_[op.q1].push_back((int)i);
            }
        }
        for (int q = 0; q < native_.num_qubits; q++) {
            consider(q);
        }
    }

    OpStream run() {
        while (emitted_natives_ < native_.ops.size()) {
            size_t before = emitted_natives_;
            run_pass();
            if (emitted_natives_ == before) {
                throw RoutingError("unroutable: no progress in pass " + std::to_string(pass_) + "; " +
                                   stuck_description());
            }
            pass_++;
        }
        stream_.passes = pass_;
        build_dependencies(stream_, dev_);
        return std::move(stream_);
    }

   private:
    struct Trip {
        int ion;
        int home;
        std::vector<int> path;
        int round;
    };

    int front(int q) const {
        return ptr_[q] < per_qubit_[q].size() ? per_qubit_[q][ptr_[q]] : -1;
    }

    void consider(int q) {
        int i = front(q);
        if (i < 0) {
            return;
        }
        const NativeOp &op = native_.ops[i];
        if (front(op.q0) == i && (op.q1 < 0 || front(op.q1) == i)) {
            ready_.insert(i);
        }
    }

    int round_of_native(int i) const {
        return in_.native_round.empty() ? -1 : in_.native_round[i];
    }

    bool colocated(int i) const {
        const NativeOp &op = native_.ops[i];
        int t = state_.location(op.q0);
        if (!dev_.is_trap(t)) {
            return false;
        }
        return op.q1 < 0 || state_.location(op.q1) == t;
    }

    void push(StreamOp op) {
        op.id = (int)stream_.ops.size();
        op.pass = pass_;
        state_.apply(op);
        stream_.ops.push_back(std::move(op));
    }

    void emit_native(int i) {
        const NativeOp &n = native_.ops[i];
        StreamOp op;
        op.kind = op_kind_of(n.kind);
        op.ion0 = n.q0;
        op.ion1 = n.q1;
        op.angle = n.angle;
        op.trap = state_.location(n.q0);
        op.native = i;
        op.round = round_of_native(i);
        push(op);
        emitted_natives_++;
        ptr_[n.q0]++;
        if (n.q1 >= 0) {
            ptr_[n.q1]++;
        }
        consider(n.q0);
        if (n.q1 >= 0) {
            consider(n.q1);
        }
    }

    void emit_colocated() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = ready_.begin(); it != ready_.end();) {
                int i = *it;
                if (colocated(i)) {
                    it = ready_.erase(it);
                    emit_native(i);
                    progress = true;
                } else {
                    ++it;
                }
            }
        }
    }

    int mover_of(const NativeOp &op) const {
        if (in_.mobile[op.q0]) {
            return op.q0;
        }
        if (in_.mobile[op.q1]) {
            return op.q1;
        }
        throw RoutingError("MS between immobile qubits " + std::to_string(op.q0) + " and " + std::to_string(op.q1) +
                           " in different traps");
    }

    bool usable(int c) const {
        const Component &comp = dev_.at(c);
        if (comp.kind == ComponentKind::trap) {
            return state_.occupancy(c) + reserved_[c] < comp.capacity;
        }
        return reserved_[c] < comp.capacity;
    }

    void emit_swaps_to_end(int ion, int trap, TrapEnd end, int round) {
        while (true) {
            const auto &ch = state_.chain(trap);
            int pos = (int)(std::find(ch.begin(), ch.end(), ion) - ch.begin());
            int target = end == TrapEnd::left ? 0 : (int)ch.size() - 1;
            if (pos == target) {
                return;
            }
            int other = ch[pos + (target > pos ? 1 : -1)];
            StreamOp op;
            op.kind = OpKind::gate_swap;
            op.ion0 = ion;
            op.ion1 = other;
            op.trap = trap;
            op.round = round;
            push(op);
        }
    }

    void emit_transport(OpKind kind, int ion, int from, int to, int round) {
        StreamOp op;
        op.kind = kind;
        op.ion0 = ion;
        op.from = from;
        op.to = to;
        op.round = round;
        push(op);
    }

    // Expands a component path into primitives; the ion starts in path[0].
    void emit_path(int ion, const std::vector<int> &path, int round) {
        for (size_t k = 0; k + 1 < path.size(); k++) {
            int from = path[k];
            int to = path[k + 1];
            const Component &cf = dev_.at(from);
            const Component &ct = dev_.at(to);
            if (cf.kind == ComponentKind::trap) {
                emit_swaps_to_end(ion, from, dev_.end_of(from, to), round);
                emit_transport(OpKind::split, ion, from, to, round);
                emit_transport(OpKind::shuttle, ion, to, to, round);
            } else if (cf.kind == ComponentKind::junction) {
                emit_transport(OpKind::junction_exit, ion, from, to, round);
                emit_transport(OpKind::shuttle, ion, to, to, round);
            } else if (ct.kind == ComponentKind::junction) {
                emit_transport(OpKind::junction_entry, ion, from, to, round);
            } else {
                emit_transport(OpKind::merge, ion, from, to, round);
            }
        }
    }

    int next_ms_partner_trap(int ion) const {
        for (size_t k = ptr_[ion]; k < per_qubit_[ion].size(); k++) {
            const NativeOp &op = native_.ops[per_qubit_[ion][k]];
            if (op.kind == NativeKind::ms) {
                int partner = op.q0 == ion ? op.q1 : op.q0;
                int t = state_.location(partner);
                return dev_.is_trap(t) ? t : -1;
            }
        }
        return -1;
    }

    void run_pass() {
        stuck_ion_ = -1;
        // (1) gates that need no movement.
        emit_colocated();

        // (2)-(6) allocate paths in priority order.
        std::vector<int> candidates;
        for (int i : ready_) {
            if (native_.ops[i].kind == NativeKind::ms && !colocated(i)) {
                candidates.push_back(i);
            }
        }
        std::fill(reserved_.begin(), reserved_.end(), 0);
        std::vector<Trip> trips;
        std::set<int> moving;
        for (int i : candidates) {
            const NativeOp &op = native_.ops[i];
            int ion = mover_of(op);
            int partner = ion == op.q0 ? op.q1 : op.q0;
            if (moving.count(ion) || moving.count(partner)) {
                continue;
            }
            int src = state_.location(ion);
            int dst = state_.location(partner);
            auto path = shortest_path(dev_, src, dst, [&](int c) { return usable(c); });
            if (path.empty()) {
                if (stuck_ion_ < 0) {
                    stuck_ion_ = ion;
                }
                continue;
            }
            for (size_t k = 1; k < path.size(); k++) {
                reserved_[path[k]]++;
            }
            moving.insert(ion);
            trips.push_back({ion, src, path, round_of_native(i)});
        }

        // (7) movement, (8) the gates it enables.
        for (const Trip &t : trips) {
            emit_path(t.ion, t.path, t.round);
        }
        emit_colocated();

        // (9) restore the rest invariant.
        restore(trips);
        state_.check_pass_boundary(stream_.ops.empty() ? -1 : stream_.ops.back().id);
    }

    void restore(const std::vector<Trip> &trips) {
        enum class Plan { home, stay, park };
        std::vector<int> final_occ(dev_.size(), 0);
        for (int t : dev_.traps()) {
            final_occ[t] = state_.occupancy(t);
        }
        for (const Trip &t : trips) {
            final_occ[state_.location(t.ion)]--;
            final_occ[t.home]++;
        }
        std::vector<Plan> plan(trips.size(), Plan::home);
        std::vector<int> target(trips.size(), -1);
        for (size_t k = 0; k < trips.size(); k++) {
            const Trip &t = trips[k];
            int cur = state_.location(t.ion);
            int dest = next_ms_partner_trap(t.ion);
            if (dest < 0 || dest == t.home) {
                continue;
            }
            int cap = dev_.at(dest).capacity;
            if (dest == cur && final_occ[cur] + 1 <= cap - 1) {
                plan[k] = Plan::stay;
                final_occ[cur]++;
                final_occ[t.home]--;
            } else if (dest != cur && final_occ[dest] + 1 <= cap - 1) {
                // The home slot stays booked in case the park path is blocked.
                plan[k] = Plan::park;
                target[k] = dest;
                final_occ[dest]++;
            }
        }
        for (size_t k = 0; k < trips.size(); k++) {
            if (plan[k] == Plan::home) {
                std::vector<int> back(trips[k].path.rbegin(), trips[k].path.rend());
                emit_path(trips[k].ion, back, trips[k].round);
            }
        }
        for (size_t k = 0; k < trips.size(); k++) {
            if (plan[k] != Plan::park) {
                continue;
            }
            const Trip &t = trips[k];
            int cur = state_.location(t.ion);
            auto path = shortest_path(dev_, cur, target[k], [&](int c) {
                const Component &comp = dev_.at(c);
                return comp.kind != ComponentKind::trap || state_.occupancy(c) < comp.capacity;
            });
            if (path.empty()) {
                std::vector<int> back(t.path.rbegin(), t.path.rend());
                emit_path(t.ion, back, t.round);
            } else {
                emit_path(t.ion, path, t.round);
            }
        }
    }

    std::string stuck_description() const {
        int ion = stuck_ion_;
        if (ion < 0 && !ready_.empty()) {
            ion = native_.ops[*ready_.begin()].q0;
        }
        if (ion < 0) {
            return "no ready operations";
        }
        return "ancilla " + std::to_string(ion) + " stuck in component " + std::to_string(state_.location(ion));
    }

    const RouteInput &in_;
    const QccdDevice &dev_;
    const NativeCircuit &native_;
    RoutingState state_;
    std::vector<std::vector<int>> per_qubit_;
    std::vector<size_t> ptr_;
    std::set<int> ready_;
    std::vector<int> reserved_;
    OpStream stream_;
    size_t emitted_natives_ = 0;
    int pass_ = 0;
    int stuck_ion_ = -1;
};

}  // namespace

OpStream route_circuit(const RouteInput &input) {
    if ((int)input.mobile.size() != input.native.num_qubits) {
        throw std::invalid_argument("mobile flags must cover every qubit");
    }
    if (!input.native_round.empty() && input.native_round.size() != input.native.ops.size()) {
        throw std::invalid_argument("native_round must cover every native op");
    }
    for (const auto &op : input.native.ops) {
        if (op.q0 < 0 || op.q0 >= input.native.num_qubits || op.q1 >= input.native.num_qubits) {
            throw std::invalid_argument("native op names a qubit outside the circuit");
        }
    }
    Router r(input);
    return r.run();
}

void build_dependencies(OpStream &stream, const QccdDevice &device) {
    std::vector<int> last_ion(stream.num_ions, -1);
    std::vector<int> last_comp(device.size(), -1);
    for (auto &op : stream.ops) {
        std::vector<int> deps;
        for (int ion : {op.ion0, op.ion1}) {
            if (ion >= 0) {
                if (last_ion[ion] >= 0) {
                    deps.push_back(last_ion[ion]);
                }
                last_ion[ion] = op.id;
            }
        }
        for (int c : op.components()) {
            const Component &comp = device.at(c);
            if (comp.kind == ComponentKind::junction && comp.capacity > 1) {
                continue;
            }
            if (last_comp[c] >= 0) {
                deps.push_back(last_comp[c]);
            }
            last_comp[c] = op.id;
        }
        std::sort(deps.begin(), deps.end());
        deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
        op.deps = std::move(deps);
    }
}

MovementCounts count_movement(const OpStream &stream) {
    MovementCounts c;
    for (const auto &op : stream.ops) {
        if (is_movement(op.kind)) {
            c.n_movement_ops++;
        }
        if (op.kind == OpKind::gate_swap) {
            c.n_gate_swaps++;
        }
    }
    return c;
}

std::string check_stream(const OpStream &stream, const QccdDevice &device) {
    try {
        RoutingState state(device, stream.initial_chains, stream.num_ions);
        state.check_pass_boundary(-1);
        for (size_t k = 0; k < stream.ops.size(); k++) {
            const StreamOp &op = stream.ops[k];
            if (op.id != (int)k) {
                return "op " + std::to_string(k) + ": id out of sequence";
            }
            for (int d : op.deps) {
                if (d < 0 || d >= op.id) {
                    return "op " + std::to_string(op.id) + ": dependency " + std::to_string(d) +
                           " does not precede it";
                }
            }
            if (k > 0 && stream.ops[k - 1].pass != op.pass) {
                state.check_pass_boundary(stream.ops[k - 1].id);
            }
            state.apply(op);
        }
        if (!stream.ops.empty()) {
            state.check_pass_boundary(stream.ops.back().id);
        }
    } catch (const RoutingViolation &e) {
        return e.what();
    } catch (const std::invalid_argument &e) {
        return e.what();
    }
    return "";
}

nlohmann::json stream_header_json(const OpStream &stream) {
    nlohmann::json chains = nlohmann::json::object();
    for (size_t t = 0; t < stream.initial_chains.size(); t++) {
        if (!stream.initial_chains[t].empty()) {
            chains[std::to_string(t)] = stream.initial_chains[t];
        }
    }
    return {{"type", "header"},
            {"device", device_spec_to_json(stream.device)},
            {"num_ions", stream.num_ions},
            {"chains", chains},
            {"passes", stream.passes}};
}

nlohmann::json stream_op_json(const StreamOp &op) {
    nlohmann::json ions = nlohmann::json::array({op.ion0});
    if (op.ion1 >= 0) {
        ions.push_back(op.ion1);
    }
    nlohmann::json j{{"type", "op"}, {"id", op.id}, {"kind", op_kind_name(op.kind)}, {"ions", ions}};
    if (is_transport(op.kind)) {
        j["from"] = op.from;
        j["to"] = op.to;
    } else {
        j["trap"] = op.trap;
    }
    if (op.kind == OpKind::ms || op.kind == OpKind::rx || op.kind == OpKind::ry || op.kind == OpKind::rz) {
        j["angle"] = op.angle;
    }
    j["native"] = op.native;
    j["round"] = op.round;
    j["pass"] = op.pass;
    j["deps"] = op.deps;
    return j;
}

StreamOp stream_op_from_json(const nlohmann::json &j) {
    StreamOp op;
    op.id = j.at("id").get<int>();
    op.kind = parse_op_kind(j.at("kind").get<std::string>());
    const auto &ions = j.at("ions");
    op.ion0 = ions.at(0).get<int>();
    op.ion1 = ions.size() > 1 ? ions.at(1).get<int>() : -1;
    op.trap = j.value("trap", -1);
    op.from = j.value("from", -1);
    op.to = j.value("to", -1);
    op.angle = j.value("angle", 0.0);
    op.native = j.value("native", -1);
    op.round = j.value("round", -1);
    op.pass = j.value("pass", 0);
    op.deps = j.value("deps", std::vector<int>{});
    return op;
}

}  // namespace qccd
