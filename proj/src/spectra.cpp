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

#include "ucoh/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ucoh/error.hpp"

namespace ucoh {

namespace {

bool lex_less(const CVector& a, const CVector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
        if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return false;
}

void fix_phase(Eigen::Ref<CVector> v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-12) {
            v *= std::conj(v(i)) / mag;
            v(i) = Complex(std::abs(v(i)), 0.0);
            return;
        }
    }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const CMatrix& entries) {
    if (entries.rows() != entries.cols() || entries.rows() < 1) {
        std::ostringstream os;
        os << "expected a nonempty square matrix, got " << entries.rows() << "x" << entries.cols();
        throw ValidationError(os.str());
    }
    if (entries.rows() > max_dimension) {
        std::ostringstream os;
        os << "dimension " << entries.rows() << " exceeds the supported maximum " << max_dimension;
        throw ValidationError(os.str());
    }
    double worst = 0.0;
    Eigen::Index wi = 0, wj = 0;
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
        for (Eigen::Index j = i; j < entries.cols(); ++j) {
            const double dev = std::abs(entries(i, j) - std::conj(entries(j, i)));
            if (!std::isfinite(dev)) {
                std::ostringstream os;
                os << "non-finite entry at (" << i << "," << j << ")";
                throw ValidationError(os.str());
            }
            if (dev > worst) {
                worst = dev;
                wi = i;
                wj = j;
            }
        }
    }
    if (worst > tol::hermitian) {
        std::ostringstream os;
        os.precision(3);
        os << "matrix is not Hermitian: |H(" << wi << "," << wj << ") - conj(H(" << wj << "," << wi
           << "))| = " << worst << " exceeds " << tol::hermitian;
        throw ValidationError(os.str());
    }
    m_ = (entries + entries.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::identity(int d) {
    return HermitianMatrix(CMatrix::Identity(d, d));
}

SpectralDecomposition decompose(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw InternalError("Hermitian eigensolver failed to converge");
    }
    const int d = h.dim();
    CMatrix vecs = solver.eigenvectors();
    for (int k = 0; k < d; ++k) fix_phase(vecs.col(k));

    RVector vals = solver.eigenvalues();
    const double floor = tol::eigen_resolution * std::max(1.0, vals.cwiseAbs().maxCoeff());
    for (int k = 0; k < d; ++k)
        if (std::abs(vals(k)) <= floor) vals(k) = 0.0;
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals(a) != vals(b)) return vals(a) > vals(b);
        return lex_less(vecs.col(a), vecs.col(b));
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(d);
    out.eigenvectors.resize(d, d);
    for (int k = 0; k < d; ++k) {
        out.eigenvalues(k) = vals(order[k]);
        out.eigenvectors.col(k) = vecs.col(order[k]);
    }
    return out;
}

HermitianMatrix from_spectrum(const SpectralDecomposition& s,
                              const std::function<double(double)>& fn) {
    RVector mapped(s.dim());
    for (int k = 0; k < s.dim(); ++k) mapped(k) = fn(s.eigenvalues(k));
    CMatrix m = s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
    return HermitianMatrix(m);
}

void require_psd(const SpectralDecomposition& s) {
    const double smallest = s.eigenvalues(s.dim() - 1);
    if (smallest < -tol::eigen_clamp) {
        std::ostringstream os;
        os.precision(6);
        os << "not a positive semidefinite operator: eigenvalue " << smallest << " is below -"
           << tol::eigen_clamp;
        throw NotAStateError(os.str());
    }
}

void require_exponent(double exponent) {
    if (!(exponent > 0.0 && exponent <= 2.0)) {
        std::ostringstream os;
        os << "matrix exponent " << exponent << " outside (0, 2]";
        throw DomainError(os.str());
    }
}

HermitianMatrix matrix_power(const SpectralDecomposition& s, double exponent) {
    require_exponent(exponent);
    require_psd(s);
    return from_spectrum(s, [exponent](double l) { return std::pow(std::max(l, 0.0), exponent); });
}

HermitianMatrix matrix_power(const HermitianMatrix& h, double exponent) {
    require_exponent(exponent);
    return matrix_power(decompose(h), exponent);
}

double trace_power(const SpectralDecomposition& s, double exponent) {
    require_exponent(exponent);
    require_psd(s);
    double sum = 0.0;
    // ascending order keeps the small terms from being swallowed
    for (int k = s.dim() - 1; k >= 0; --k) sum += std::pow(std::max(s.eigenvalues(k), 0.0), exponent);
    return sum;
}

double quadratic_form(const CVector& v, const HermitianMatrix& h) {
    if (v.size() != h.dim()) {
        std::ostringstream os;
        os << "vector length " << v.size() << " does not match matrix dimension " << h.dim();
        throw ValidationError(os.str());
    }
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > tol::unit_norm) {
        std::ostringstream os;
        os.precision(17);
        os << "vector is not unit norm (norm = " << norm << ")";
        throw ValidationError(os.str());
    }
    double value = v.dot(h.matrix() * v).real();
    if (value < 0.0 && value >= -tol::eigen_clamp) value = 0.0;
    return value;
}

}  // namespace ucoh
