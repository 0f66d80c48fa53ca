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

#include <string_view>

#include "ucoh/frames.hpp"
#include "ucoh/states.hpp"

namespace ucoh {

/// Parameter regions of the averaged-coherence lower bounds.
///   B1: alpha in [1/2, 1), beta in (-inf, 0) u (0, 1]
///   B2: alpha in (0, 1/2), beta < 0
///   B3: alpha in (0, 1/2), beta in (0, 1]
///   Renyi: beta == 0 (the beta -> 0 limit)
enum class Branch { B1, B2, B3, Renyi };

std::string_view to_string(Branch b);

/// Validated (alpha, beta) with alpha in (0, 1) and beta <= 1.
class CoherenceParams {
public:
    CoherenceParams(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    Branch branch() const noexcept { return branch_; }
    /// beta == 1: the Tsallis alpha-relative entropy of coherence.
    bool is_tsallis() const noexcept { return beta_ == 1.0; }

private:
    double alpha_;
    double beta_;
    Branch branch_;
};

enum class LogBase { Two, E };

/// Unified (alpha, beta)-relative entropy, alpha in [0, 1]. Dispatch order:
///   alpha == 1                 -> tr rho log rho - tr rho log sigma
///   beta == 0                  -> log Q / (alpha - 1)
///   beta == 1                  -> (Q - 1) / (alpha - 1)
///   beta == 1/alpha            -> ((tr rho^(1/a) sigma^(1-1/a))^alpha - 1) / (1 - alpha)
///   otherwise                  -> (Q^beta - 1) / ((alpha - 1) beta)
/// with Q = tr(rho^alpha sigma^(1-alpha)). Logarithms default to base 2.
/// Throws SupportError unless supp(rho) lies inside supp(sigma).
double unified_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                                double beta, LogBase base = LogBase::Two);

/// Closed-form coherence with respect to an orthonormal basis.
double ureoc_basis(const DensityMatrix& rho, const Frame& basis, const CoherenceParams& params);

/// Closed-form coherence under the POVM (d/N)|phi_j><phi_j| of a tight frame.
/// Rejects beta == 0; use renyi_coherence for that limit.
double ureoc_frame(const DensityMatrix& rho, const Frame& f, const CoherenceParams& params);

double tsallis_coherence(const DensityMatrix& rho, const Frame& f, double alpha);

/// beta -> 0 limit of ureoc_frame, natural logarithm.
double renyi_coherence(const DensityMatrix& rho, const Frame& f, double alpha);

/// Mean of ureoc_frame over the members of a certified ensemble.
double avg_coherence(const MuetfEnsemble& e, const DensityMatrix& rho, const CoherenceParams& params);

/// Mean of renyi_coherence over the members of a certified ensemble.
double avg_renyi_coherence(const MuetfEnsemble& e, const DensityMatrix& rho, double alpha);

}  // namespace ucoh
