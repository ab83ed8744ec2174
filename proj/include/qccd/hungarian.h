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

#ifndef QCCD_HUNGARIAN_H
#define QCCD_HUNGARIAN_H

#include <vector>

namespace qccd {

/// Minimum-cost assignment of every row to a distinct column.
/// `cost` is n x m with n <= m. Returns the column chosen for each row.
std::vector<int> solve_assignment(const std::vector<std::vector<double>> &cost);

}  // namespace qccd

#endif
