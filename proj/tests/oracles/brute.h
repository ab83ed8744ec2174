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


// Test-only exhaustive searches: assignment by permutation and minimum-hop
// paths by enumerating every simple path.

#ifndef QCCD_TESTS_BRUTE_H
#define QCCD_TESTS_BRUTE_H

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

// Minimum total cost of assigning each row to a distinct column.
inline double brute_assignment_cost(const std::vector<std::vector<double>> &cost) {
    const size_t n = cost.size();
    if (n == 0) {
        return 0;
    }
    const size_t m = cost[0].size();
    std::vector<int> cols(m);
    std::iota(cols.begin(), cols.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    // Every n-subset ordering shows up among the permutations of all m columns.
    do {
        double t = 0;
        for (size_t i = 0; i < n; i++) {
            t += cost[i][cols[i]];
        }
        best = std::min(best, t);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return best;
}

// Fewest-hop simple path from src to dst whose interior and destination pass
// `allowed`; ties go to the lexicographically smallest id sequence.
inline std::vector<int> brute_shortest_path(const std::vector<std::vector<int>> &adj, int src, int dst,
                                            const std::function<bool(int)> &allowed) {
    std::vector<int> best;
    std::vector<int> path{src};
    std::vector<bool> on(adj.size(), false);
    on[src] = true;
    std::function<void(int)> dfs = [&](int u) {
        if (u == dst) {
            if (best.empty() || path.size() < best.size() || (path.size() == best.size() && path < best)) {
                best = path;
            }
            return;
        }
        if (!best.empty() && path.size() >= best.size()) {
            return;
        }
        for (int v : adj[u]) {
            if (on[v] || !allowed(v)) {
                continue;
            }
            on[v] = true;
            path.push_back(v);
            dfs(v);
            path.pop_back();
            on[v] = false;
        }
    };
    dfs(src);
    return best;
}

}  // namespace oracle

#endif
