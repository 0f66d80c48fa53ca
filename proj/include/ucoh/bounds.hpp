// Copyright 2026 The ucoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>

#include "ucoh/coherence.hpp"
#include "ucoh/frames.hpp"
#include "ucoh/states.hpp"

namespace ucoh {

/// (d, N, M) of a mutually unbiased ensemble of equiangular tight frames.
struct EnsembleShape {
    int d;
    int n;
    int m;

    /// Throws ValidationError unless d >= 1, N >= d, M >= 1.
    EnsembleShape(int d, int n, int m);
    static EnsembleShape of(const MuetfEnsemble& e);

    double c() const noexcept { return etf_overlap(d, n); }
    double s() const noexcept { return static_cast<double>(n) / d; }
};

struct BoundResult {
    double value = 0.0;
    Branch branch = Branch::B1;
    double x = 0.0;          // argument handed to L_gamma
    double brace = 0.0;      // 1 - (gamma - 1) L_gamma(x), before exponentiation
    bool brace_clamped = false;
    double chord_argument = 0.0;  // B3 only: the B2-type expression fed to the chord
    bool chord_clamped = false;   // B3 only: a negative chord argument was raised to 0
};

/// Upper bound on the member-averaged index of coincidence:
/// (1 - c)(d tr rho^2 - 1) / (M N S) + 1/N.
double lemma2_rhs(const DensityMatrix& rho, const EnsembleShape& shape);

/// Same expression with tr rho^2 replaced by d tr rho^(2a) / (tr rho^a)^2,
/// i.e. evaluated on rho^a / tr rho^a. a in (0, 1); result in (0, 1].
double x_argument(const DensityMatrix& rho, const EnsembleShape& shape, double a);

/// Lower bound on (1/M) Sum_mu C_(alpha,beta)(F_mu; rho) for branches B1-B3.
BoundResult theorem1_bound(const DensityMatrix& rho, const EnsembleShape& shape,
                           const CoherenceParams& params);

/// Mutually unbiased bases: shape (d, d, M).
BoundResult corollary1_mub_bound(const DensityMatrix& rho, int d, int m, const CoherenceParams& params);

/// Single equiangular tight frame: shape must have M = 1.
BoundResult corollary2_etf_bound(const DensityMatrix& rho, const EnsembleShape& shape,
                                 const CoherenceParams& params);

/// beta = 1 (Tsallis): B1 for alpha >= 1/2, B3 below.
BoundResult corollary3_tsallis_bound(const DensityMatrix& rho, const EnsembleShape& shape, double alpha);

/// beta -> 0 (Renyi, natural log).
double corollary4_renyi_bound(const DensityMatrix& rho, const EnsembleShape& shape, double alpha);

/// Pure-state forms of the three branch bounds, all evaluated at
/// x = (1 - c)(d - 1)/(M N S) + 1/N. Each entry is set only where its
/// formula is defined: b1 for alpha >= 1/2, b2 for alpha < 1/2,
/// b3 for alpha < 1/2 with beta in (0, 1].
struct PureStateBounds {
    std::optional<double> b1;
    std::optional<double> b2;
    std::optional<double> b3;
    double x = 0.0;

    /// The entry matching params.branch().
    double for_branch(Branch b) const;
};

PureStateBounds pure_state_bounds(const EnsembleShape& shape, const CoherenceParams& params);

/// Dispatches to corollary4_renyi_bound when beta == 0, theorem1_bound otherwise.
double lower_bound(const DensityMatrix& rho, const EnsembleShape& shape, const CoherenceParams& params);

/// avg_coherence or avg_renyi_coherence to match lower_bound.
double averaged_coherence(const MuetfEnsemble& e, const DensityMatrix& rho, const CoherenceParams& params);

}  // namespace ucoh
