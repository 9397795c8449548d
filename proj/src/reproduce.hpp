// Copyright 2026 The Phasebound Authors
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

#ifndef PHASEBOUND_REPRODUCE_HPP
#define PHASEBOUND_REPRODUCE_HPP

#include <string>
#include <vector>

namespace phasebound {

/// One reference check: pass iff lo <= actual <= hi.
struct CheckRow {
    std::string name;
    double actual;
    double lo;
    double hi;
    bool pass;
};

struct Report {
    std::vector<CheckRow> rows;
    bool all_pass = true;

    void add(std::string name, double actual, double lo, double hi);
};

/// Recompute the universal constants and compare with their quoted values.
Report reproduce_constants();

/// Re-run the discrete network campaign at the nine published
/// transmissivities; checks each ratio window, the h matches, and the mean
/// RMSE-reduction window.
Report reproduce_table1();

/// Re-run the continuous network campaign; checks the ratio floor and the
/// implied RMSE-reduction window.
Report reproduce_table2(int h_max = 2048);

/// Normalized-precision scan checks: the continuous classical constant and
/// the integer-pass quantum-over-classical reduction cap across the grid.
Report reproduce_fig2a();

/// Required-squeezing checks: value at the optimal total transmissivity,
/// round-trip residuals, and the shape of the curve across the grid.
Report reproduce_fig2b();

/// Imperfection-threshold surface checks on an n x n grid: every present
/// threshold lies below eta_p*eta_m, and the surface is partly present and
/// partly absent.
Report reproduce_fig4(int grid_n = 10, double precision = 8e-5);

}  // namespace phasebound

#endif
