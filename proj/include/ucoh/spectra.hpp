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

#include <complex>
#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace ucoh {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double hermitian = 1e-12;   // |H_ij - conj(H_ji)|
inline constexpr double eigen_clamp = 1e-12; // eigenvalues in [-tol, 0) are zeroed
// Eigenvalues within this multiple of the spectral radius are below the
// solver's resolution and are reported as exactly 0.
inline constexpr double eigen_resolution = 32 * std::numeric_limits<double>::epsilon();
inline constexpr double unit_norm = 1e-10;
inline constexpr double certify = 1e-9;      // frame / MUETF structural checks
}  // namespace tol

inline constexpr int max_dimension = 64;

/// Dense complex Hermitian matrix. The constructor checks Hermiticity
/// and stores the exactly symmetrized matrix (H + H^dagger) / 2.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const CMatrix& entries);

    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    const CMatrix& matrix() const noexcept { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

    double trace() const { return m_.trace().real(); }

    static HermitianMatrix identity(int d);

private:
    CMatrix m_;
};

/// Eigenvalues in nonincreasing order, eigenvectors as the matching
/// columns. Each eigenvector's first component with modulus above 1e-12
/// is made real positive.
struct SpectralDecomposition {
    RVector eigenvalues;
    CMatrix eigenvectors;

    int dim() const noexcept { return static_cast<int>(eigenvalues.size()); }
};

SpectralDecomposition decompose(const HermitianMatrix& h);

/// Sum_k fn(lambda_k) |u_k><u_k|.
HermitianMatrix from_spectrum(const SpectralDecomposition& s,
                              const std::function<double(double)>& fn);

/// Fractional power of a positive semidefinite matrix, exponent in (0, 2].
/// Eigenvalues in [-1e-12, 0) are treated as zero; anything lower throws
/// NotAStateError.
HermitianMatrix matrix_power(const HermitianMatrix& h, double exponent);
HermitianMatrix matrix_power(const SpectralDecomposition& s, double exponent);

/// Sum_k max(lambda_k, 0)^exponent with the same domain rules as matrix_power.
double trace_power(const SpectralDecomposition& s, double exponent);

/// Real part of <v|H|v>. v must be unit norm within 1e-10. Values in
/// [-1e-12, 0) are clamped to zero.
double quadratic_form(const CVector& v, const HermitianMatrix& h);

/// Throws NotAStateError when the smallest eigenvalue is below -1e-12.
void require_psd(const SpectralDecomposition& s);

void require_exponent(double exponent);

}  // namespace ucoh
