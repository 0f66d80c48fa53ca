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

#include <cstdint>

#include "ucoh/spectra.hpp"

namespace ucoh {

/// Unit-trace positive semidefinite Hermitian matrix. The spectral
/// decomposition is computed once at construction (validation needs it)
/// and reused for every matrix power.
class DensityMatrix {
public:
    explicit DensityMatrix(const HermitianMatrix& m);
    explicit DensityMatrix(const CMatrix& m) : DensityMatrix(HermitianMatrix(m)) {}

    int dim() const noexcept { return matrix_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return matrix_; }
    const CMatrix& matrix() const noexcept { return matrix_.matrix(); }
    const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }

    HermitianMatrix power(double exponent) const { return matrix_power(spectrum_, exponent); }
    double trace_power(double exponent) const { return ucoh::trace_power(spectrum_, exponent); }
    double purity() const;

private:
    HermitianMatrix matrix_;
    SpectralDecomposition spectrum_;
};

DensityMatrix maximally_mixed(int d);

DensityMatrix from_pure(const CVector& v);

/// diag((1+v)/2, (1-v)/2): mixture of I/2 and |0><0| with weight v.
DensityMatrix pseudopure(double v);

/// (I + r1 X + r2 Y + r3 Z) / 2 for a Bloch vector in the closed unit ball.
DensityMatrix bloch_qubit(double r1, double r2, double r3);

/// G G^dagger / tr(G G^dagger) with G a d x d matrix of independent
/// standard complex Gaussians drawn from mt19937_64(seed).
DensityMatrix random_state(int d, std::uint64_t seed);

/// Haar-random pure state (normalized complex Gaussian vector).
DensityMatrix random_pure_state(int d, std::uint64_t seed);

/// Stream-splitting helper so sample i of a sweep gets its own seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace ucoh
