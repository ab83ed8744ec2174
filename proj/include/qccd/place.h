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

#ifndef QCCD_PLACE_H
#define QCCD_PLACE_H

#include <utility>
#include <vector>

#include "json.hpp"
#include "qccd/codes.h"
#include "qccd/device.h"

namespace qccd {

struct Clustering {
    std::vector<std::vector<int>> clusters;
    int target_size = 1;
};

struct Mapping {
    std::vector<int> qubit_trap;
    std::vector<int> qubit_slot;
    std::vector<int> cluster_trap;
    /// Sum of Euclidean distances between rescaled centroids and traps.
    double cost = 0;
};

int cluster_target_size(int capacity);

Clustering cluster_qubits(const CodeLayout &layout, const InteractionGraph &graph, int capacity);

/// Mean qubit coordinate of each cluster.
std::vector<std::pair<double, double>> cluster_centroids(const Clustering &clustering, const CodeLayout &layout);

/// Grid shape (rows, cols) that embeds the centroids with the most even
/// axis scaling, then the fewest rounding collisions, then the smallest
/// rounding error, then the smallest area.
std::pair<int, int> choose_grid_dims(const std::vector<std::pair<double, double>> &centroids);

Mapping map_clusters(const Clustering &clustering, const CodeLayout &layout, const QccdDevice &device);

/// Sanity checks shared by tests and the router: injective slots and
/// occupancy at most capacity - 1 (or capacity for a lone trap).
void validate_mapping(const Mapping &mapping, const QccdDevice &device);

nlohmann::json mapping_to_json(const Mapping &mapping);

}  // namespace qccd

#endif
