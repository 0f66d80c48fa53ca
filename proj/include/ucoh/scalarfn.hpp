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

#include "ucoh/frames.hpp"

namespace ucoh {

/// ln_g(x) = (x^(1-g) - 1) / (1 - g), and ln(x) when |g - 1| < 1e-8.
double gamma_log(double x, double gamma);

/// Sum_j p_j ln_g(1/p_j) with 0 ln_g(1/0) = 0.
double tsallis_entropy(const ProbabilityVector& p, double gamma);

/// Sum_j p_j^2.
double index_of_coincidence(const ProbabilityVector& p);

/// Piecewise-linear lower envelope of Tsallis entropy in terms of the
/// index of coincidence. On [1/(k+1), 1/k] it is the chord through
/// (1/(k+1), ln_g(k+1)) and (1/k, ln_g(k)); k = floor(1/X). gamma in (0, 2].
double big_L_gamma(double x, double gamma);

/// Parameters of the concave map f(x) = x / (1 - a x), a = (alpha - 1) beta.
struct ChordParams {
    double alpha;
    double beta;

    /// alpha in (0, 1), beta in (0, 1]; throws DomainError otherwise.
    ChordParams(double alpha, double beta);
    double slope_parameter() const noexcept { return (alpha - 1.0) * beta; }
};

double chord_generator_f(double x, const ChordParams& params);

/// Linear interpolation of f between floor(x) and floor(x) + 1.
double chord_L(double x, const ChordParams& params);

}  // namespace ucoh
