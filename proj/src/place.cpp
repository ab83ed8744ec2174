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

#include "qccd/place.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "qccd/hungarian.h"

namespace qccd {

int cluster_target_size(int capacity) {
    return std::max(1, capacity - 1);
}

namespace {

struct Bisector {
    const CodeLayout &layout;
    const InteractionGraph &graph;
    int first_axis;
    std::vector<std::vector<int>> out;

    int coord(int q, int axis) const {
        return axis == 0 ? layout.qubits[q].pos.x : layout.qubits[q].pos.y;
    }

    void split(std::vector<int> ids, int k, int depth) {
        if (k == 1) {
            std::sort(ids.begin(), ids.end());
            out.push_back(std::move(ids));
            return;
        }
        int axis = (first_axis + depth) % 2;
        std::sort(ids.begin(), ids.end(), [&](int a, int b) {
            return std::make_tuple(coord(a, axis), coord(a, 1 - axis), a) <
                   std::make_tuple(coord(b, axis), coord(b, 1 - axis), b);
        });
        int n = (int)ids.size();
        int k1 = (k + 1) / 2;
        int n1 = (int)std::lround((double)n * k1 / k);
        if (n1 > 0 && n1 < n && coord(ids[n1 - 1], axis) == coord(ids[n1], axis)) {
            reorder_tied_run(ids, n1, axis);
        }
        std::vector<int> left(ids.begin(), ids.begin() + n1);
        std::vector<int> right(ids.begin() + n1, ids.end());
        split(std::move(left), k1, depth + 1);
        split(std::move(right), k - k1, depth + 1);
    }

    // Among qubits sharing the cut coordinate, send those pulled hardest
    // toward the left side (by interaction weight) to the left.
    void reorder_tied_run(std::vector<int> &ids, int cut, int axis) {
        int v = coord(ids[cut], axis);
        int lo = cut;
        while (lo > 0 && coord(ids[lo - 1], axis) == v) {
            lo--;
        }
        int hi = cut;
        while (hi < (int)ids.size() && coord(ids[hi], axis) == v) {
            hi++;
        }
        std::vector<std::pair<double, int>> scored;
        for (int i = lo; i < hi; i++) {
            double s = 0;
            for (int j = 0; j < lo; j++) {
                s += graph.weight(ids[i], ids[j]);
            }
            for (int j = hi; j < (int)ids.size(); j++) {
                s -= graph.weight(ids[i], ids[j]);
            }
            scored.push_back({-s, i - lo});
        }
        std::stable_sort(scored.begin(), scored.end());
        std::vector<int> run;
        for (const auto &[score, offset] : scored) {
            run.push_back(ids[lo + offset]);
        }
        std::copy(run.begin(), run.end(), ids.begin() + lo);
    }
};

}  // namespace

Clustering cluster_qubits(const CodeLayout &layout, const InteractionGraph &graph, int capacity) {
    if (capacity < 2) {
        throw std::invalid_argument("trap capacity must be at least 2 to host a two-qubit gate");
    }
    Clustering c;
    c.target_size = cluster_target_size(capacity);
    int n = (int)layout.num_qubits();
    if (n == 0) {
        return c;
    }
    int k = (n + c.target_size - 1) / c.target_size;
    int min_x = std::numeric_limits<int>::max(), max_x = std::numeric_limits<int>::min();
    int min_y = min_x, max_y = max_x;
    for (const auto &q : layout.qubits) {
        min_x = std::min(min_x, q.pos.x);
        max_x = std::max(max_x, q.pos.x);
        min_y = std::min(min_y, q.pos.y);
        max_y = std::max(max_y, q.pos.y);
    }
    Bisector b{layout, graph, (max_y - min_y) > (max_x - min_x) ? 1 : 0, {}};
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    b.split(ids, k, 0);
    c.clusters = std::move(b.out);
    return c;
}

std::vector<std::pair<double, double>> cluster_centroids(const Clustering &clustering, const CodeLayout &layout) {
    std::vector<std::pair<double, double>> out;
    for (const auto &cl : clustering.clusters) {
        double x = 0, y = 0;
        for (int q : cl) {
            x += layout.qubits[q].pos.x;
            y += layout.qubits[q].pos.y;
        }
        out.push_back({x / cl.size(), y / cl.size()});
    }
    return out;
}

namespace {

struct Box {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

Box bounding_box(const std::vector<std::pair<double, double>> &pts) {
    Box b{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
    for (const auto &[x, y] : pts) {
        b.x0 = std::min(b.x0, x);
        b.x1 = std::max(b.x1, x);
        b.y0 = std::min(b.y0, y);
        b.y1 = std::max(b.y1, y);
    }
    return b;
}

double rescale(double v, double from0, double from1, double to0, double to1) {
    if (from1 - from0 < 1e-12) {
        return (to0 + to1) / 2;
    }
    return to0 + (v - from0) * (to1 - to0) / (from1 - from0);
}

std::vector<std::pair<double, double>> rescale_all(const std::vector<std::pair<double, double>> &pts,
                                                   const Box &to) {
    Box from = bounding_box(pts);
    std::vector<std::pair<double, double>> out;
    for (const auto &[x, y] : pts) {
        out.push_back({rescale(x, from.x0, from.x1, to.x0, to.x1), rescale(y, from.y0, from.y1, to.y0, to.y1)});
    }
    return out;
}

}  // namespace

std::pair<int, int> choose_grid_dims(const std::vector<std::pair<double, double>> &centroids) {
    int k = (int)centroids.size();
    if (k <= 1) {
        return {1, 1};
    }
    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
    for (const auto &[x, y] : centroids) {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }
    const double span_x = hi_x - lo_x;
    const double span_y = hi_y - lo_y;
    using Key = std::tuple<double, int, double, int, int>;
    Key best{std::numeric_limits<double>::infinity(), 0, 0.0, 0, 0};
    std::pair<int, int> best_dims{0, 0};
    for (int rows = 2; rows <= k; rows++) {
        for (int cols = 2; rows * cols <= 2 * k; cols++) {
            if (rows * cols < k) {
                continue;
            }
            auto scaled = rescale_all(centroids, Box{0, (double)cols - 1, 0, (double)rows - 1});
            std::set<std::pair<long, long>> cells;
            int collisions = 0;
            double err = 0;
            for (const auto &[x, y] : scaled) {
                long rx = std::lround(x);
                long ry = std::lround(y);
                err += std::hypot(x - rx, y - ry);
                if (!cells.insert({rx, ry}).second) {
                    collisions++;
                }
            }
            // Unequal axis scale factors distort the neighbourhoods that
            // share a junction, which costs transport contention later.
            double skew = 0;
            if (span_x > 0 && span_y > 0) {
                skew = std::abs(std::log(((cols - 1) / span_x) / ((rows - 1) / span_y)));
            }
            // Round so float noise cannot flip the later tie-breaks.
            Key key{std::round(skew * 1e9) / 1e9, collisions, std::round(err * 1e9) / 1e9, rows * cols, rows};
            if (key < best) {
                best = key;
                best_dims = {rows, cols};
            }
        }
    }
    return best_dims;
}

QccdDevice device_for_code(const CodeLayout &layout, int capacity, Topology topology, Wiring wiring) {
    if (capacity < 2) {
        throw std::invalid_argument("trap capacity must be at least 2 to host a two-qubit gate");
    }
    DeviceSpec spec;
    spec.topology = topology;
    spec.wiring = wiring;
    spec.capacity = capacity;
    int n = (int)layout.num_qubits();
    if (topology == Topology::single_chain) {
        spec.capacity = std::max(capacity, n + 1);
        spec.n_traps = 1;
        return build_device(spec);
    }
    Clustering clustering = cluster_qubits(layout, interaction_graph(generate_round(layout)), capacity);
    int k = (int)clustering.clusters.size();
    if (topology == Topology::grid) {
        auto [rows, cols] = choose_grid_dims(cluster_centroids(clustering, layout));
        spec.rows = rows;
        spec.cols = cols;
    } else {
        spec.n_traps = k;
    }
    return build_device(spec);
}

namespace {

struct Candidate {
    std::vector<int> traps;
    int rows = 1;
    int cols = 1;
};

std::vector<Candidate> grid_candidates(const QccdDevice &device, int k, bool require_centre) {
    const int R = device.spec().rows;
    const int C = device.spec().cols;
    const double cy = (R - 1) / 2.0;
    const double cx = (C - 1) / 2.0;
    std::vector<Candidate> out;
    for (int h = 1; h <= R; h++) {
        for (int w = 1; w <= C; w++) {
            if (h * w < k || (require_centre && h * w > 2 * k)) {
                continue;
            }
            for (int r0 = 0; r0 + h <= R; r0++) {
                for (int c0 = 0; c0 + w <= C; c0++) {
                    if (require_centre && (cy < r0 - 1e-9 || cy > r0 + h - 1 + 1e-9 || cx < c0 - 1e-9 ||
                                           cx > c0 + w - 1 + 1e-9)) {
                        continue;
                    }
                    Candidate c;
                    c.rows = h;
                    c.cols = w;
                    for (int r = r0; r < r0 + h; r++) {
                        for (int col = c0; col < c0 + w; col++) {
                            c.traps.push_back(r * C + col);
                        }
                    }
                    out.push_back(std::move(c));
                    if (out.size() >= 10000) {
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Candidate> linear_candidates(const QccdDevice &device, int k, bool require_centre) {
    const int n = (int)device.traps().size();
    const double centre = (n - 1) / 2.0;
    std::vector<Candidate> out;
    for (int len = k; len <= n; len++) {
        if (require_centre && len > 2 * k) {
            break;
        }
        for (int s = 0; s + len <= n; s++) {
            if (require_centre && (centre < s - 1e-9 || centre > s + len - 1 + 1e-9)) {
                continue;
            }
            Candidate c;
            for (int i = s; i < s + len; i++) {
                c.traps.push_back(device.traps()[i]);
            }
            out.push_back(std::move(c));
            if (out.size() >= 10000) {
                return out;
            }
        }
    }
    return out;
}

}  // namespace

Mapping map_clusters(const Clustering &clustering, const CodeLayout &layout, const QccdDevice &device) {
    const int k = (int)clustering.clusters.size();
    const int n_traps = (int)device.traps().size();
    if (k > n_traps) {
        throw std::invalid_argument("device has " + std::to_string(n_traps) + " traps but placement needs " +
                                    std::to_string(k));
    }
    for (const auto &cl : clustering.clusters) {
        if ((int)cl.size() > device.at(device.traps()[0]).capacity - 1) {
            throw std::invalid_argument("cluster of " + std::to_string(cl.size()) +
                                        " qubits does not fit a trap with a free slot");
        }
    }
    Mapping m;
    m.qubit_trap.assign(layout.num_qubits(), -1);
    m.qubit_slot.assign(layout.num_qubits(), -1);
    if (k == 0) {
        return m;
    }

    std::vector<Candidate> cands;
    if (device.topology() == Topology::grid && device.spec().rows * device.spec().cols == n_traps) {
        cands = grid_candidates(device, k, true);
        if (cands.empty()) {
            cands = grid_candidates(device, k, false);
        }
    } else if (device.topology() == Topology::linear) {
        cands = linear_candidates(device, k, true);
        if (cands.empty()) {
            cands = linear_candidates(device, k, false);
        }
    }
    if (cands.empty()) {
        cands.push_back({device.traps()});
    }

    auto centroids = cluster_centroids(clustering, layout);
    if (device.topology() == Topology::grid) {
        // Keep the regions that scale both axes alike; see choose_grid_dims.
        double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
        for (const auto &[x, y] : centroids) {
            lo_x = std::min(lo_x, x);
            hi_x = std::max(hi_x, x);
            lo_y = std::min(lo_y, y);
            hi_y = std::max(hi_y, y);
        }
        const double span_x = hi_x - lo_x;
        const double span_y = hi_y - lo_y;
        if (span_x > 0 && span_y > 0) {
            auto skew = [&](const Candidate &c) {
                if (c.rows < 2 || c.cols < 2) {
                    return std::numeric_limits<double>::infinity();
                }
                return std::round(std::abs(std::log(((c.cols - 1) / span_x) / ((c.rows - 1) / span_y))) * 1e9) / 1e9;
            };
            double best = std::numeric_limits<double>::infinity();
            for (const auto &c : cands) {
                best = std::min(best, skew(c));
            }
            if (best < std::numeric_limits<double>::infinity()) {
                std::erase_if(cands, [&](const Candidate &c) { return skew(c) > best; });
            }
        }
    }
    // Small enough that the perturbation cannot beat a genuine cost difference.
    const double eps = 1e-7 / ((double)k * (double)n_traps + 1);

    struct Evaluated {
        double bound;
        size_t index;
        std::vector<std::vector<double>> cost;
        std::vector<std::vector<double>> dist;
    };
    std::vector<Evaluated> evals;
    for (size_t ci = 0; ci < cands.size(); ci++) {
        const auto &traps = cands[ci].traps;
        std::vector<std::pair<double, double>> tp;
        for (int t : traps) {
            tp.push_back({device.at(t).x, device.at(t).y});
        }
        auto scaled = rescale_all(centroids, bounding_box(tp));
        Evaluated e{0, ci, {}, {}};
        for (int i = 0; i < k; i++) {
            std::vector<double> row, drow;
            double best = std::numeric_limits<double>::max();
            for (size_t j = 0; j < traps.size(); j++) {
                double d = std::hypot(scaled[i].first - tp[j].first, scaled[i].second - tp[j].second);
                drow.push_back(d);
                row.push_back(d + eps * traps[j]);
                best = std::min(best, d);
            }
            e.bound += best;
            e.cost.push_back(std::move(row));
            e.dist.push_back(std::move(drow));
        }
        evals.push_back(std::move(e));
    }
    std::stable_sort(evals.begin(), evals.end(), [](const Evaluated &a, const Evaluated &b) {
        return a.bound < b.bound;
    });

    double best_cost = std::numeric_limits<double>::infinity();
    size_t best_index = 0;
    std::vector<int> best_assign;
    for (const auto &e : evals) {
        if (e.bound > best_cost + 1e-9) {
            break;
        }
        std::vector<int> assign = solve_assignment(e.cost);
        double total = 0;
        for (int i = 0; i < k; i++) {
            total += e.dist[i][assign[i]];
        }
        if (total < best_cost - 1e-9 || (std::abs(total - best_cost) <= 1e-9 && e.index < best_index)) {
            best_cost = total;
            best_index = e.index;
            best_assign.clear();
            for (int a : assign) {
                best_assign.push_back(cands[e.index].traps[a]);
            }
        }
    }

    m.cost = best_cost;
    m.cluster_trap = best_assign;
    for (int i = 0; i < k; i++) {
        int slot = 0;
        for (int q : clustering.clusters[i]) {
            m.qubit_trap[q] = best_assign[i];
            m.qubit_slot[q] = slot++;
        }
    }
    validate_mapping(m, device);
    return m;
}

void validate_mapping(const Mapping &mapping, const QccdDevice &device) {
    std::vector<int> occupancy(device.size(), 0);
    std::set<std::pair<int, int>> used;
    for (size_t q = 0; q < mapping.qubit_trap.size(); q++) {
        int t = mapping.qubit_trap[q];
        if (t < 0 || t >= (int)device.size() || !device.is_trap(t)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is not placed in a trap");
        }
        if (!used.insert({t, mapping.qubit_slot[q]}).second) {
            throw std::invalid_argument("two qubits share trap " + std::to_string(t) + " slot " +
                                        std::to_string(mapping.qubit_slot[q]));
        }
        occupancy[t]++;
    }
    for (int t : device.traps()) {
        if (occupancy[t] > device.at(t).capacity - 1) {
            throw std::invalid_argument("trap " + std::to_string(t) + " holds " + std::to_string(occupancy[t]) +
                                        " ions at rest; capacity is " + std::to_string(device.at(t).capacity));
        }
    }
}

nlohmann::json mapping_to_json(const Mapping &mapping) {
    return {{"qubit_trap", mapping.qubit_trap},
            {"qubit_slot", mapping.qubit_slot},
            {"cluster_trap", mapping.cluster_trap},
            {"cost", mapping.cost}};
}

}  // namespace qccd
