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

// Reference values checked by the `reproduce` command and the regression
// suites, together with their pinned tolerances. Version the data when a
// value or tolerance changes.

#ifndef PHASEBOUND_REFERENCE_DATA_HPP
#define PHASEBOUND_REFERENCE_DATA_HPP

#include <array>

namespace phasebound::reference {

inline constexpr int kDataVersion = 1;

// Quoted decimal values of the universal constants, with the precision at
// which they are quoted.
struct NamedConstant {
    const char* name;
    double value;
    double tolerance;
};

inline constexpr std::array<NamedConstant, 5> kConstants{{
    {"w", -0.406, 1e-3},
    {"k_coeff", 1.59, 1e-2},
    {"gamma_opt", 0.2032, 1e-4},  // quoted as 20.32%, +/- 0.01 pp
    {"cl_const", 0.648, 1e-3},
    {"advantage_ratio", 0.805, 1e-3},
}};

// Published optima of the discrete interference-network campaign, one row
// per transmissivity: module count h, h*xi at the optimum (NaN where the
// objective is flat in xi), and F' relative to the single-pass bound
// 4 eta/(1-eta)^2. Six significant figures.
struct NetworkRow {
    double eta;
    int h;
    double h_xi;  // NaN marks the flat h = 1 row
    double ratio;
};

inline constexpr double kNoHxi = -1.0;  // placeholder; exported as NA

inline constexpr std::array<NetworkRow, 9> kNetworkTable{{
    {0.1, 1, kNoHxi, 0.900000},
    {0.2, 2, 0.0100001, 0.927824},
    {0.3, 3, 0.0100005, 0.922368},
    {0.4, 3, 0.0100004, 0.924007},
    {0.5, 5, 0.0100000, 0.930968},
    {0.6, 6, 0.0100009, 0.933002},
    {0.7, 9, 0.0100000, 0.934944},
    {0.8, 15, 0.0100001, 0.935805},
    {0.9, 32, 0.0100076, 0.936049},
}};

// Tolerances for reproducing the discrete campaign: each ratio must land in
// [published - kNetworkRatioSlackBelow, published + kNetworkRatioSlackAbove]
// and the optimal h must match for at least kNetworkMinHMatches rows.
inline constexpr double kNetworkRatioSlackBelow = 1e-4;
inline constexpr double kNetworkRatioSlackAbove = 5e-3;
inline constexpr int kNetworkMinHMatches = 7;

// Published optimum of the continuous campaign (pass count freed through
// gamma = eta^k), relative to the continuous-pass quantum limit.
struct ContinuousRow {
    double gamma;
    int h;
    double h_xi;
    double ratio;
};

inline constexpr ContinuousRow kContinuousOptimum{0.988747, 510, 5.12423,
                                                  0.940333};

// The continuous campaign must reach at least kContinuousRatioFloor, and its
// implied RMSE reduction 1 - sqrt(ratio) must land in the quoted 2.9%..3.1%
// window.
inline constexpr double kContinuousRatioFloor = 0.9395;
inline constexpr double kContinuousReductionLo = 0.029;
inline constexpr double kContinuousReductionHi = 0.031;

// Headline averages over the nine-row campaign: mean RMSE reduction
// 1 - sqrt(ratio) quoted as 3.6%, accepted in [3.4%, 3.9%]; and the
// integer-pass quantum-over-classical reduction stays below 20% everywhere.
inline constexpr double kMeanReductionLo = 0.034;
inline constexpr double kMeanReductionHi = 0.039;
inline constexpr double kDiscreteReductionCap = 0.20;

}  // namespace phasebound::reference

#endif
