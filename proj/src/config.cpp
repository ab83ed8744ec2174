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


#include "qccd/config.h"

#include <charconv>
#include <sstream>
#include <vector>

namespace qccd {

namespace {

int parse_int(const std::string &field, const char *what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + field + "'");
    }
    return v;
}

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

void CompileConfig::validate() const {
    if (distance < 2) {
        throw std::invalid_argument("distance must be at least 2");
    }
    if (capacity < 2) {
        throw std::invalid_argument("trap capacity must be at least 2, got " + std::to_string(capacity));
    }
    if (!(improvement >= 1)) {
        throw std::invalid_argument("gate improvement must be at least 1");
    }
    if (rounds < 0) {
        throw std::invalid_argument("rounds must be non-negative");
    }
    timing.validate();
    noise.validate();
}

nlohmann::json config_to_json(const CompileConfig &c) {
    auto noise = noise_to_json(c.noise);
    // improvement and cooling live at the top level.
    noise.erase("improvement");
    noise.erase("cooling");
    return {{"code", code_kind_name(c.code)},
            {"distance", c.distance},
            {"capacity", c.capacity},
            {"topology", topology_name(c.topology)},
            {"wiring", wiring_name(c.wiring)},
            {"improvement", c.improvement},
            {"rounds", c.effective_rounds()},
            {"cooling", c.cooling},
            {"seed", c.seed},
            {"timing_us", timing_to_json(c.timing)},
            {"noise", noise}};
}

CompileConfig config_from_json(const nlohmann::json &j) {
    CompileConfig c;
    if (j.contains("tuple")) {
        c = parse_config_tuple(j.at("tuple").get<std::string>());
    }
    if (j.contains("code")) {
        c.code = parse_code_kind(j.at("code").get<std::string>());
    }
    if (j.contains("topology")) {
        c.topology = parse_topology(j.at("topology").get<std::string>());
    }
    if (j.contains("wiring")) {
        c.wiring = parse_wiring(j.at("wiring").get<std::string>());
    }
    c.distance = j.value("distance", c.distance);
    c.capacity = j.value("capacity", c.capacity);
    c.improvement = j.value("improvement", c.improvement);
    c.rounds = j.value("rounds", c.rounds);
    c.cooling = j.value("cooling", c.cooling);
    c.seed = j.value("seed", c.seed);
    if (j.contains("timing_us")) {
        c.timing = timing_from_json(j.at("timing_us"));
    }
    if (j.contains("noise")) {
        c.noise = noise_from_json(j.at("noise"));
    }
    c.noise.improvement = c.improvement;
    c.noise.cooling = c.cooling;
    c.validate();
    return c;
}

std::string code_letter(CodeKind kind) {
    switch (kind) {
        case CodeKind::repetition:
            return "R";
        case CodeKind::rotated_surface:
            return "S";
        case CodeKind::unrotated_surface:
            return "U";
    }
    return "?";
}

std::string topology_letter(Topology t) {
    switch (t) {
        case Topology::grid:
            return "G";
        case Topology::linear:
            return "L";
        case Topology::switch_star:
            return "W";
        case Topology::single_chain:
            return "C";
    }
    return "?";
}

CompileConfig parse_config_tuple(const std::string &text, const CompileConfig &base) {
    std::vector<std::string> fields;
    std::stringstream in(text);
    std::string f;
    while (std::getline(in, f, ',')) {
        fields.push_back(trim(f));
    }
    if (fields.size() != 4) {
        throw std::invalid_argument("expected CODE,d,capacity,TOPO but got '" + text + "'");
    }
    CompileConfig c = base;
    c.code = parse_code_kind(fields[0]);
    c.distance = parse_int(fields[1], "distance");
    c.capacity = parse_int(fields[2], "capacity");
    c.topology = parse_topology(fields[3]);
    c.validate();
    return c;
}

std::string format_config_tuple(const CompileConfig &c) {
    return code_letter(c.code) + "," + std::to_string(c.distance) + "," + std::to_string(c.capacity) + "," +
           topology_letter(c.topology);
}

}  // namespace qccd
