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

#include "ucoh/coherence.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ucoh/error.hpp"

namespace ucoh {

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::B1: return "B1";
        case Branch::B2: return "B2";
        case Branch::B3: return "B3";
        case Branch::Renyi: return "Renyi";
    }
    return "?";
}

CoherenceParams::CoherenceParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    static constexpr const char* regions =
        " (admissible: B1 alpha in [1/2,1) with beta in (-inf,0)u(0,1]; "
        "B2 alpha in (0,1/2) with beta < 0; B3 alpha in (0,1/2) with beta in (0,1]; "
        "beta = 0 selects the Renyi limit)";
    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::ostringstream os;
        os << "alpha = " << alpha << " violates alpha in (0, 1)" << regions;
        throw DomainError(os.str());
    }
    if (!(beta <= 1.0) || !std::isfinite(beta)) {
        std::ostringstream os;
        os << "beta = " << beta << " violates beta <= 1" << regions;
        throw DomainError(os.str());
    }
    if (beta == 0.0)
        branch_ = Branch::Renyi;
    else if (alpha >= 0.5)
        branch_ = Branch::B1;
    else if (beta < 0.0)
        branch_ = Branch::B2;
    else
        branch_ = Branch::B3;
}

namespace {

constexpr double support_cutoff = 1e-12;
constexpr double support_leak = 1e-10;

void require_same_dim(int a, int b) {
    if (a != b) {
        std::ostringstream os;
        os << "dimension mismatch: " << a << " vs " << b;
        throw ValidationError(os.str());
    }
}

// Sum over eigenvalues above the cutoff of lambda^p |u><u|; p may be
// zero or negative (pseudo-inverse powers on the support).
CMatrix support_power(const SpectralDecomposition& s, double p) {
    RVector mapped(s.dim());
    for (int k = 0; k < s.dim(); ++k) {
        const double l = s.eigenvalues(k);
        mapped(k) = l > support_cutoff ? std::pow(l, p) : 0.0;
    }
    return s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
}

CMatrix state_power(const DensityMatrix& rho, double p) {
    if (p > 0.0 && p <= 2.0) return rho.power(p).matrix();
    return support_power(rho.spectrum(), p);
}

void require_support(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const auto& s = sigma.spectrum();
    double leak = 0.0;
    for (int k = 0; k < s.dim(); ++k) {
        if (s.eigenvalues(k) <= support_cutoff) {
            const CVector u = s.eigenvectors.col(k);
            leak += u.dot(rho.matrix() * u).real();
        }
    }
    if (leak > support_leak) {
        std::ostringstream os;
        os.precision(3);
        os << "support of rho is not contained in support of sigma (weight " << leak
           << " outside supp sigma)";
        throw SupportError(os.str());
    }
}

double trace_product(const CMatrix& a, const CMatrix& b) {
    // tr(AB) = sum_ij A_ij B_ji
    return (a.cwiseProduct(b.transpose())).sum().real();
}

double log_in(double x, LogBase base) {
    return base == LogBase::Two ? std::log2(x) : std::log(x);
}

void require_nonzero_beta(const CoherenceParams& params) {
    if (params.beta() == 0.0)
        throw DomainError("beta = 0 is the Renyi limit; use renyi_coherence");
}

// Sum_j ((d/N) <phi_j|rho^alpha|phi_j>)^(1/alpha)
double power_sum(const DensityMatrix& rho, const Frame& f, double alpha) {
    const HermitianMatrix ra = rho.power(alpha);
    const double scale = static_cast<double>(f.dim()) / f.count();
    double s = 0.0;
    for (const CVector& phi : f.vectors()) s += std::pow(scale * quadratic_form(phi, ra), 1.0 / alpha);
    return s;
}

double closed_form(double s, const CoherenceParams& p) {
    const double ab = p.alpha() * p.beta();
    return std::expm1(ab * std::log(s)) / ((p.alpha() - 1.0) * p.beta());
}

}  // namespace

double unified_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                                double beta, LogBase base) {
    require_same_dim(rho.dim(), sigma.dim());
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream os;
        os << "alpha = " << alpha << " is outside [0, 1]";
        throw DomainError(os.str());
    }
    if (!std::isfinite(beta)) throw DomainError("beta must be finite");
    require_support(rho, sigma);

    if (alpha == 1.0) {
        const auto& rs = rho.spectrum();
        double self = 0.0;
        for (int k = 0; k < rs.dim(); ++k) {
            const double l = rs.eigenvalues(k);
            if (l > support_cutoff) self += l * log_in(l, base);
        }
        const auto& ss = sigma.spectrum();
        double cross = 0.0;
        for (int k = 0; k < ss.dim(); ++k) {
            const double m = ss.eigenvalues(k);
            if (m <= support_cutoff) continue;
            const CVector u = ss.eigenvectors.col(k);
            cross += u.dot(rho.matrix() * u).real() * log_in(m, base);
        }
        return self - cross;
    }

    if (alpha > 0.0 && beta != 0.0 && beta != 1.0 && std::abs(beta - 1.0 / alpha) < 1e-12) {
        const double p = 1.0 / alpha;
        const double q = trace_product(support_power(rho.spectrum(), p),
                                       support_power(sigma.spectrum(), 1.0 - p));
        return (std::pow(q, alpha) - 1.0) / (1.0 - alpha);
    }

    const double q = trace_product(state_power(rho, alpha), state_power(sigma, 1.0 - alpha));
    if (beta == 0.0) return log_in(q, base) / (alpha - 1.0);
    if (beta == 1.0) return (q - 1.0) / (alpha - 1.0);
    return std::expm1(beta * std::log(q)) / ((alpha - 1.0) * beta);
}

double ureoc_basis(const DensityMatrix& rho, const Frame& basis, const CoherenceParams& params) {
    require_same_dim(rho.dim(), basis.dim());
    require_nonzero_beta(params);
    if (!basis.is_orthonormal()) throw ValidationError("reference basis is not orthonormal");
    return closed_form(power_sum(rho, basis, params.alpha()), params);
}

double ureoc_frame(const DensityMatrix& rho, const Frame& f, const CoherenceParams& params) {
    require_same_dim(rho.dim(), f.dim());
    require_nonzero_beta(params);
    if (!f.is_tight()) throw ValidationError("coherence under a frame needs a tight frame");
    return closed_form(power_sum(rho, f, params.alpha()), params);
}

double tsallis_coherence(const DensityMatrix& rho, const Frame& f, double alpha) {
    return ureoc_frame(rho, f, CoherenceParams(alpha, 1.0));
}

double renyi_coherence(const DensityMatrix& rho, const Frame& f, double alpha) {
    const CoherenceParams params(alpha, 0.0);
    require_same_dim(rho.dim(), f.dim());
    if (!f.is_tight()) throw ValidationError("coherence under a frame needs a tight frame");
    return alpha / (alpha - 1.0) * std::log(power_sum(rho, f, params.alpha()));
}

double avg_coherence(const MuetfEnsemble& e, const DensityMatrix& rho, const CoherenceParams& params) {
    e.require_certified();
    double sum = 0.0;
    for (const Frame& f : e.members()) sum += ureoc_frame(rho, f, params);
    return sum / e.size();
}

double avg_renyi_coherence(const MuetfEnsemble& e, const DensityMatrix& rho, double alpha) {
    e.require_certified();
    double sum = 0.0;
    for (const Frame& f : e.members()) sum += renyi_coherence(rho, f, alpha);
    return sum / e.size();
}

}  // namespace ucoh
