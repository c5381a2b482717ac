// Copyright 2026 The gaussmem Authors
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

#pragma once

namespace gaussmem {

/// Diagonal two-mode Gaussian channel sigma -> X sigma X^T + Y with
/// X = diag(xi1, xi1, xi2, xi2) and Y = diag(y_q1, y_p1, y_q2, y_p2).
struct MemoryChannel {
    double xi1 = 1.0;
    double xi2 = 1.0;
    double y_q1 = 0.0;
    double y_p1 = 0.0;
    double y_q2 = 0.0;
    double y_p2 = 0.0;

    static MemoryChannel identity() { return {}; }

    double delta_q() const { return y_q2 - y_q1; }
    double delta_p() const { return y_p2 - y_p1; }

    bool operator==(const MemoryChannel &) const = default;
};

}  // namespace gaussmem
