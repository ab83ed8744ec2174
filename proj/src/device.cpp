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

#include "qccd/device.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace qccd {

std::string topology_name(Topology t) {
    switch (t) {
        case Topology::grid:
            return "grid";
        case Topology::linear:
            return "linear";
        case Topology::switch_star:
            return "switch";
        case Topology::single_chain:
            return "single_chain";
    }
    return "?";
}

Topology parse_topology(const std::string &text) {
    if (text == "grid" || text == "G") {
        return Topology::grid;
    }
    if (text == "linear" || text == "L") {
        return Topology::linear;
    }
    if (text == "switch" || text == "W") {
        return Topology::switch_star;
    }
    if (text == "single_chain" || text == "chain" || text == "C") {
        return Topology::single_chain;
    }
    throw std::invalid_argument("unknown topology '" + text + "'");
}

std::string wiring_name(Wiring w) {
    return w == Wiring::standard ? "standard" : "wise";
}

Wiring parse_wiring(const std::string &text) {
    if (text == "standard") {
        return Wiring::standard;
    }
    if (text == "wise" || text == "WISE") {
        return Wiring::wise;
    }
    throw std::invalid_argument("unknown wiring '" + text + "'");
}

nlohmann::json device_spec_to_json(const DeviceSpec &spec) {
    return {
        {"topology", topology_name(spec.topology)},
        {"rows", spec.rows},
        {"cols", spec.cols},
        {"n_traps", spec.n_traps},
        {"capacity", spec.capacity},
        {"wiring", wiring_name(spec.wiring)},
    };
}

DeviceSpec device_spec_from_json(const nlohmann::json &j) {
    DeviceSpec s;
    s.topology = parse_topology(j.at("topology").get<std::string>());
    s.rows = j.value("rows", 0);
    s.cols = j.value("cols", 0);
    s.n_traps = j.value("n_traps", 0);
    s.capacity = j.value("capacity", 2);
    s.wiring = parse_wiring(j.value("wiring", std::string("standard")));
    return s;
}

QccdDevice::QccdDevice(DeviceSpec spec, std::vector<Component> components)
    : spec_(spec), components_(std::move(components)) {
    index();
}

void QccdDevice::index() {
    traps_.clear();
    junctions_.clear();
    for (auto &c : components_) {
        c.segments.clear();
    }
    for (size_t i = 0; i < components_.size(); i++) {
        auto &c = components_[i];
        if (c.id != (int)i) {
            throw std::invalid_argument("component ids must equal their index");
        }
        if (c.kind == ComponentKind::trap) {
            traps_.push_back(c.id);
        } else if (c.kind == ComponentKind::junction) {
            junctions_.push_back(c.id);
        } else {
            int n = (int)components_.size();
            if (c.a < 0 || c.b < 0 || c.a >= n || c.b >= n || c.a == c.b) {
                throw std::invalid_argument("segment " + std::to_string(c.id) + " has bad endpoints");
            }
            components_[c.a].segments.push_back(c.id);
            components_[c.b].segments.push_back(c.id);
        }
    }
}

std::vector<int> QccdDevice::neighbours(int id) const {
    const Component &c = components_[id];
    if (c.kind == ComponentKind::segment) {
        return {c.a, c.b};
    }
    return c.segments;
}

TrapEnd QccdDevice::end_of(int trap, int segment) const {
    const Component &s = components_[segment];
    return s.a == trap ? s.end_a : s.end_b;
}

int QccdDevice::other_end(int segment, int from) const {
    const Component &s = components_[segment];
    return s.a == from ? s.b : s.a;
}

DeviceCounts QccdDevice::counts() const {
    DeviceCounts out;
    out.n_traps = (int)traps_.size();
    out.n_junctions = (int)junctions_.size();
    out.n_segments = (int)(components_.size() - traps_.size() - junctions_.size());
    out.capacity = spec_.capacity;
    return out;
}

bool QccdDevice::connected() const {
    if (components_.empty()) {
        return false;
    }
    std::vector<bool> seen(components_.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    size_t count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : neighbours(u)) {
            if (!seen[v]) {
                seen[v] = true;
                count++;
                q.push(v);
            }
        }
    }
    return count == components_.size();
}

void QccdDevice::validate() const {
    if (traps_.empty()) {
        throw std::invalid_argument("device has no traps");
    }
    for (const auto &c : components_) {
        if (c.capacity < 1) {
            throw std::invalid_argument("component " + std::to_string(c.id) + " has capacity < 1");
        }
        if (c.kind == ComponentKind::segment) {
            if (c.capacity != 1) {
                throw std::invalid_argument("segments hold exactly one ion");
            }
            if (is_segment(c.a) || is_segment(c.b)) {
                throw std::invalid_argument("segment " + std::to_string(c.id) + " touches a segment");
            }
        }
    }
    if (!connected()) {
        throw std::invalid_argument("device graph is disconnected");
    }
    switch (spec_.topology) {
        case Topology::grid:
            for (int j : junctions_) {
                if (components_[j].segments.size() > 4) {
                    throw std::invalid_argument("grid junction degree above 4");
                }
            }
            break;
        case Topology::linear:
            for (int t : traps_) {
                if (components_[t].segments.size() > 2) {
                    throw std::invalid_argument("linear trap degree above 2");
                }
            }
            break;
        case Topology::switch_star:
            if (traps_.size() > 1 &&
                (junctions_.size() != 1 || components_[junctions_[0]].segments.size() != traps_.size())) {
                throw std::invalid_argument("switch needs one junction linked to every trap");
            }
            break;
        case Topology::single_chain:
            if (traps_.size() != 1) {
                throw std::invalid_argument("single chain has exactly one trap");
            }
            break;
    }
}

nlohmann::json QccdDevice::to_json() const {
    nlohmann::json j = device_spec_to_json(spec_);
    auto counts_ = counts();
    j["n_junctions"] = counts_.n_junctions;
    j["n_segments"] = counts_.n_segments;
    j["n_traps"] = counts_.n_traps;
    return j;
}

namespace {

Component make_node(int id, ComponentKind kind, int capacity, double x, double y) {
    Component c;
    c.id = id;
    c.kind = kind;
    c.capacity = capacity;
    c.x = x;
    c.y = y;
    return c;
}

void add_segment(std::vector<Component> &out, int a, TrapEnd end_a, int b, TrapEnd end_b) {
    Component s;
    s.id = (int)out.size();
    s.kind = ComponentKind::segment;
    s.capacity = 1;
    s.a = a;
    s.b = b;
    s.end_a = end_a;
    s.end_b = end_b;
    s.x = (out[a].x + out[b].x) / 2;
    s.y = (out[a].y + out[b].y) / 2;
    out.push_back(s);
}

}  // namespace

QccdDevice build_device(const DeviceSpec &spec_in) {
    DeviceSpec spec = spec_in;
    if (spec.capacity < 1) {
        throw std::invalid_argument("trap capacity must be at least 1");
    }
    std::vector<Component> comps;
    switch (spec.topology) {
        case Topology::grid: {
            int R = spec.rows;
            int C = spec.cols;
            if (R < 1 || C < 1) {
                throw std::invalid_argument("grid needs positive rows and cols");
            }
            if (R * C > 1 && (R < 2 || C < 2)) {
                throw std::invalid_argument("a multi-trap grid needs at least 2 rows and 2 cols");
            }
            spec.n_traps = R * C;
            for (int r = 0; r < R; r++) {
                for (int c = 0; c < C; c++) {
                    comps.push_back(make_node(r * C + c, ComponentKind::trap, spec.capacity, c, r));
                }
            }
            int first_junction = (int)comps.size();
            for (int r = 0; r + 1 < R; r++) {
                for (int c = 0; c + 1 < C; c++) {
                    comps.push_back(make_node((int)comps.size(), ComponentKind::junction, 1, c + 0.5, r + 0.5));
                }
            }
            for (int r = 0; r + 1 < R; r++) {
                for (int c = 0; c + 1 < C; c++) {
                    int j = first_junction + r * (C - 1) + c;
                    add_segment(comps, r * C + c, TrapEnd::right, j, TrapEnd::left);
                    add_segment(comps, r * C + c + 1, TrapEnd::left, j, TrapEnd::left);
                    add_segment(comps, (r + 1) * C + c, TrapEnd::right, j, TrapEnd::left);
                    add_segment(comps, (r + 1) * C + c + 1, TrapEnd::left, j, TrapEnd::left);
                }
            }
            break;
        }
        case Topology::linear: {
            int n = spec.n_traps;
            if (n < 1) {
                throw std::invalid_argument("linear device needs at least one trap");
            }
            for (int i = 0; i < n; i++) {
                comps.push_back(make_node(i, ComponentKind::trap, spec.capacity, i, 0));
            }
            for (int i = 0; i + 1 < n; i++) {
                add_segment(comps, i, TrapEnd::right, i + 1, TrapEnd::left);
            }
            break;
        }
        case Topology::switch_star: {
            int n = spec.n_traps;
            if (n < 1) {
                throw std::invalid_argument("switch device needs at least one trap");
            }
            int side = (int)std::ceil(std::sqrt((double)n));
            for (int i = 0; i < n; i++) {
                comps.push_back(make_node(i, ComponentKind::trap, spec.capacity, i % side, i / side));
            }
            if (n > 1) {
                double cx = 0;
                double cy = 0;
                for (const auto &t : comps) {
                    cx += t.x;
                    cy += t.y;
                }
                // A non-blocking n-way switch: exclusivity lives on its ports.
                int j = n;
                comps.push_back(make_node(j, ComponentKind::junction, n * spec.capacity, cx / n, cy / n));
                for (int i = 0; i < n; i++) {
                    add_segment(comps, i, TrapEnd::right, j, TrapEnd::left);
                }
            }
            break;
        }
        case Topology::single_chain:
            spec.n_traps = 1;
            comps.push_back(make_node(0, ComponentKind::trap, spec.capacity, 0, 0));
            break;
    }
    QccdDevice dev(spec, std::move(comps));
    dev.validate();
    return dev;
}

}  // namespace qccd
