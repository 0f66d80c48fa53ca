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

#include "ucoh/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ucoh/error.hpp"

namespace ucoh {

namespace {

constexpr double trace_tolerance = 1e-12;

// std::normal_distribution is implementation-defined, so the Gaussian
// sampler is spelled out to keep seeded output identical across toolchains.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double uniform_open() {
        // 53 random bits mapped into (0, 1)
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    Complex complex_normal() {
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

DensityMatrix::DensityMatrix(const HermitianMatrix& m) : matrix_(m), spectrum_(decompose(m)) {
    const double tr = matrix_.trace();
    if (std::abs(tr - 1.0) > trace_tolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "density matrix must have unit trace, got " << tr;
        throw NotAStateError(os.str());
    }
    require_psd(spectrum_);
}

double DensityMatrix::purity() const {
    return matrix().cwiseAbs2().sum();
}

DensityMatrix maximally_mixed(int d) {
    if (d < 1) throw ValidationError("dimension must be positive");
    return DensityMatrix(CMatrix(CMatrix::Identity(d, d) / static_cast<double>(d)));
}

DensityMatrix from_pure(const CVector& v) {
    const double norm = v.norm();
    if (v.size() < 1 || std::abs(norm - 1.0) > tol::unit_norm) {
        std::ostringstream os;
        os.precision(17);
        os << "pure state vector must be unit norm, got norm " << norm;
        throw ValidationError(os.str());
    }
    // Renormalize so the trace check sees the exact projector.
    const CVector u = v / norm;
    return DensityMatrix(CMatrix(u * u.adjoint()));
}

DensityMatrix pseudopure(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << "pseudopure weight " << v << " outside [0, 1]";
        throw DomainError(os.str());
    }
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = (1.0 + v) / 2.0;
    m(1, 1) = (1.0 - v) / 2.0;
    return DensityMatrix(m);
}

DensityMatrix bloch_qubit(double r1, double r2, double r3) {
    const double r2sum = r1 * r1 + r2 * r2 + r3 * r3;
    if (!(r2sum <= 1.0 + 1e-12)) {
        std::ostringstream os;
        os << "Bloch vector (" << r1 << ", " << r2 << ", " << r3 << ") lies outside the unit ball";
        throw DomainError(os.str());
    }
    CMatrix m(2, 2);
    m(0, 0) = (1.0 + r3) / 2.0;
    m(1, 1) = (1.0 - r3) / 2.0;
    m(0, 1) = Complex(r1, -r2) / 2.0;
    m(1, 0) = Complex(r1, r2) / 2.0;
    return DensityMatrix(m);
}

DensityMatrix random_state(int d, std::uint64_t seed) {
    if (d < 2) throw ValidationError("random_state needs dimension >= 2");
    GaussianSource src(seed);
    CMatrix g(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) g(i, j) = src.complex_normal();
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

DensityMatrix random_pure_state(int d, std::uint64_t seed) {
    if (d < 2) throw ValidationError("random_pure_state needs dimension >= 2");
    GaussianSource src(seed);
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = src.complex_normal();
    return from_pure(v / v.norm());
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace ucoh
