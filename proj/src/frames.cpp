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

#include "ucoh/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ucoh/error.hpp"

namespace ucoh {

namespace {

void fix_phase(CVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-12) {
            v *= std::conj(v(i)) / mag;
            v(i) = Complex(std::abs(v(i)), 0.0);
            return;
        }
    }
}

bool is_odd_prime(int d) {
    if (d < 3 || d % 2 == 0) return false;
    for (int q = 3; q * q <= d; q += 2)
        if (d % q == 0) return false;
    return true;
}

double overlap2(const CVector& a, const CVector& b) { return std::norm(a.dot(b)); }

}  // namespace

double etf_overlap(int d, int n) {
    if (n == 1) return 0.0;
    return static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1));
}

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(int dim, std::vector<CVector> vectors) : Frame(dim, std::move(vectors), true) {}

Frame Frame::unchecked(int dim, std::vector<CVector> vectors) {
    return Frame(dim, std::move(vectors), false);
}

Frame::Frame(int dim, std::vector<CVector> vectors, bool check)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ < 1 || dim_ > max_dimension) {
        std::ostringstream os;
        os << "frame dimension " << dim_ << " outside [1, " << max_dimension << "]";
        throw ValidationError(os.str());
    }
    if (count() < dim_) {
        std::ostringstream os;
        os << "a frame in dimension " << dim_ << " needs at least " << dim_ << " vectors, got "
           << count();
        throw ValidationError(os.str());
    }
    for (int j = 0; j < count(); ++j) {
        if (vectors_[j].size() != dim_) {
            std::ostringstream os;
            os << "frame vector " << j << " has length " << vectors_[j].size() << ", expected "
               << dim_;
            throw ValidationError(os.str());
        }
        if (check && std::abs(vectors_[j].norm() - 1.0) > tol::unit_norm) {
            std::ostringstream os;
            os.precision(17);
            os << "frame vector " << j << " is not unit norm (norm = " << vectors_[j].norm() << ")";
            throw ValidationError(os.str());
        }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(frame_operator(), Eigen::EigenvaluesOnly);
    s0_ = solver.eigenvalues().minCoeff();
    s1_ = solver.eigenvalues().maxCoeff();
    if (check && !(s0_ > tol::eigen_clamp)) {
        std::ostringstream os;
        os << "vectors do not span C^" << dim_ << " (smallest frame-operator eigenvalue " << s0_ << ")";
        throw ValidationError(os.str());
    }
}

CMatrix Frame::frame_operator() const {
    CMatrix op = CMatrix::Zero(dim_, dim_);
    for (const auto& v : vectors_) op.noalias() += v * v.adjoint();
    return op;
}

bool Frame::is_tight() const noexcept {
    const double s = static_cast<double>(count()) / dim_;
    return std::abs(s0_ - s) <= tol::certify && std::abs(s1_ - s) <= tol::certify;
}

bool Frame::is_orthonormal() const {
    if (count() != dim_) return false;
    for (int i = 0; i < count(); ++i) {
        if (std::abs(vectors_[i].norm() - 1.0) > tol::certify) return false;
        for (int j = i + 1; j < count(); ++j)
            if (overlap2(vectors_[i], vectors_[j]) > tol::certify) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ProbabilityVector

ProbabilityVector::ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw ValidationError("probability vector is empty");
    double sum = 0.0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        double& p = values_[j];
        if (!std::isfinite(p) || p < -tol::eigen_clamp) {
            std::ostringstream os;
            os << "probability " << j << " is " << p;
            throw ValidationError(os.str());
        }
        p = std::max(p, 0.0);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        std::ostringstream os;
        os.precision(17);
        os << "probabilities sum to " << sum << ", not 1";
        throw ValidationError(os.str());
    }
}

ProbabilityVector ProbabilityVector::unnormalized(std::vector<double> values) {
    ProbabilityVector p;
    for (double& v : values) v = std::max(v, 0.0);
    p.values_ = std::move(values);
    p.normalized_ = false;
    return p;
}

// ---------------------------------------------------------------------------
// Certification

bool CertificationReport::passed() const noexcept {
    if (!cross_unbiased) return false;
    return std::all_of(members.begin(), members.end(), [](const MemberReport& m) { return m.passed(); });
}

std::string CertificationReport::to_text() const {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific;
    const auto flag = [](bool ok) { return ok ? "ok  " : "FAIL"; };
    for (std::size_t mu = 0; mu < members.size(); ++mu) {
        const MemberReport& m = members[mu];
        os << "member " << mu << " (d=" << m.dim << ", N=" << m.count << ")\n";
        os << "  [" << flag(m.unit_norm) << "] unit norm       max dev " << m.norm_deviation;
        if (!m.unit_norm) os << " at vector " << m.worst_norm_index;
        os << "\n";
        os << "  [" << flag(m.tight) << "] tight           max |S - N/d| " << m.tight_deviation
           << "  (S0 " << m.s0 << ", S1 " << m.s1 << ")\n";
        os << "  [" << flag(m.equiangular) << "] equiangular     max dev " << m.equiangular_deviation
           << " from c = " << m.overlap_target;
        if (m.worst_pair.index_a >= 0)
            os << "  worst pair (" << m.worst_pair.index_a << "," << m.worst_pair.index_b << ")";
        os << "\n";
    }
    if (members.size() > 1) {
        os << "[" << flag(cross_unbiased) << "] cross-unbiased  max dev " << cross_deviation
           << " from 1/d";
        if (worst_cross.member_a >= 0)
            os << "  worst (mu,i,nu,j) = (" << worst_cross.member_a << "," << worst_cross.index_a
               << "," << worst_cross.member_b << "," << worst_cross.index_b << ")";
        os << "\n";
    }
    os << (passed() ? "PASS" : "FAIL") << " (tolerance " << tolerance << ")\n";
    return os.str();
}

namespace {

MemberReport certify_member(const Frame& f) {
    MemberReport r;
    r.dim = f.dim();
    r.count = f.count();
    r.s0 = f.lower_frame_bound();
    r.s1 = f.upper_frame_bound();
    for (int j = 0; j < f.count(); ++j) {
        const double dev = std::abs(f.vector(j).norm() - 1.0);
        if (dev > r.norm_deviation) {
            r.norm_deviation = dev;
            r.worst_norm_index = j;
        }
    }
    r.unit_norm = r.norm_deviation <= tol::certify;

    const double s = static_cast<double>(f.count()) / f.dim();
    r.tight_deviation = std::max(std::abs(r.s0 - s), std::abs(r.s1 - s));
    r.tight = r.tight_deviation <= tol::certify;

    r.overlap_target = etf_overlap(f.dim(), f.count());
    for (int i = 0; i < f.count(); ++i) {
        for (int j = i + 1; j < f.count(); ++j) {
            const double dev = std::abs(overlap2(f.vector(i), f.vector(j)) - r.overlap_target);
            if (r.worst_pair.index_a < 0 || dev > r.equiangular_deviation) {
                r.equiangular_deviation = dev;
                r.worst_pair = {0, i, 0, j};
            }
        }
    }
    r.equiangular = r.equiangular_deviation <= tol::certify;
    return r;
}

}  // namespace

CertificationReport verify_frame(const Frame& f) {
    CertificationReport rep;
    rep.members.push_back(certify_member(f));
    return rep;
}

CertificationReport verify_muetf(const MuetfEnsemble& e) {
    CertificationReport rep;
    for (int mu = 0; mu < e.size(); ++mu) {
        MemberReport m = certify_member(e.member(mu));
        m.worst_pair.member_a = m.worst_pair.member_b = mu;
        rep.members.push_back(m);
    }
    const double target = 1.0 / e.dim();
    for (int mu = 0; mu < e.size(); ++mu) {
        for (int nu = mu + 1; nu < e.size(); ++nu) {
            for (int i = 0; i < e.count(); ++i) {
                for (int j = 0; j < e.count(); ++j) {
                    const double dev =
                        std::abs(overlap2(e.member(mu).vector(i), e.member(nu).vector(j)) - target);
                    if (rep.worst_cross.member_a < 0 || dev > rep.cross_deviation) {
                        rep.cross_deviation = dev;
                        rep.worst_cross = {mu, i, nu, j};
                    }
                }
            }
        }
    }
    rep.cross_unbiased = rep.cross_deviation <= tol::certify;
    return rep;
}

// ---------------------------------------------------------------------------
// MuetfEnsemble

MuetfEnsemble::MuetfEnsemble(std::vector<Frame> members, std::string label)
    : members_(std::move(members)), label_(std::move(label)) {
    if (members_.empty()) throw ValidationError("an ensemble needs at least one frame");
    for (std::size_t mu = 1; mu < members_.size(); ++mu) {
        if (members_[mu].dim() != members_[0].dim() || members_[mu].count() != members_[0].count()) {
            std::ostringstream os;
            os << "dimension mismatch: member " << mu << " is (d=" << members_[mu].dim()
               << ", N=" << members_[mu].count() << "), member 0 is (d=" << members_[0].dim()
               << ", N=" << members_[0].count() << ")";
            throw ValidationError(os.str());
        }
    }
}

MuetfEnsemble MuetfEnsemble::certified(std::vector<Frame> members, std::string label) {
    MuetfEnsemble e(std::move(members), std::move(label));
    e.report_ = verify_muetf(e);
    return e;
}

void MuetfEnsemble::require_certified() const {
    if (!report_) throw UncertifiedError("ensemble has not been certified");
    if (!report_->passed())
        throw UncertifiedError("ensemble failed certification:\n" + report_->to_text());
}

// ---------------------------------------------------------------------------
// Constructions

Frame computational_basis(int d) {
    if (d < 2) throw ValidationError("computational_basis needs d >= 2");
    std::vector<CVector> vs;
    for (int j = 0; j < d; ++j) vs.push_back(CVector::Unit(d, j));
    return Frame(d, std::move(vs));
}

MuetfEnsemble qubit_mub_triple() {
    const double h = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    auto vec = [](Complex a, Complex b) {
        CVector v(2);
        v << a, b;
        return v;
    };
    Frame hadamard(2, {vec(h, h), vec(h, -h)});
    Frame circular(2, {vec(h, i * h), vec(h, -i * h)});
    return MuetfEnsemble::certified({hadamard, circular, computational_basis(2)}, "mub2");
}

MuetfEnsemble prime_mub_set(int d) {
    if (!is_odd_prime(d) || d > 31) {
        std::ostringstream os;
        os << "prime_mub_set needs an odd prime d <= 31, got " << d;
        throw DomainError(os.str());
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Frame> bases;
    for (int mu = 0; mu < d; ++mu) {
        std::vector<CVector> vs;
        for (int j = 0; j < d; ++j) {
            CVector v(d);
            for (int k = 0; k < d; ++k) {
                // exponent reduced mod d before the trig call
                const long e = (static_cast<long>(mu) * k * k + static_cast<long>(j) * k) % d;
                v(k) = std::polar(amp, 2.0 * std::numbers::pi * e / d);
            }
            vs.push_back(std::move(v));
        }
        bases.emplace_back(d, std::move(vs));
    }
    bases.push_back(computational_basis(d));
    return MuetfEnsemble::certified(std::move(bases), "mub-prime-" + std::to_string(d));
}

Frame simplex_etf(int d) {
    if (d < 2 || d > max_dimension) throw ValidationError("simplex_etf needs 2 <= d <= 64");
    const int n = d + 1;
    // Helmert basis of the all-ones complement in R^n:
    // h_k = (1, ..., 1, -k, 0, ..., 0) / sqrt(k (k + 1)), k = 1..d.
    Eigen::MatrixXd helmert = Eigen::MatrixXd::Zero(n, d);
    for (int k = 1; k <= d; ++k) {
        const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) helmert(i, k - 1) = s;
        helmert(k, k - 1) = -k * s;
    }
    std::vector<CVector> vs;
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd e = -Eigen::VectorXd::Ones(n) / static_cast<double>(n);
        e(j) += 1.0;
        Eigen::VectorXd coords = helmert.transpose() * e;
        coords.normalize();
        CVector v = coords.cast<Complex>();
        fix_phase(v);
        vs.push_back(std::move(v));
    }
    return Frame(d, std::move(vs));
}

Frame qubit_sic() {
    const double r3 = 1.0 / std::sqrt(3.0);
    const double r23 = std::sqrt(2.0 / 3.0);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    auto vec = [](Complex a, Complex b) {
        CVector v(2);
        v << a, b;
        return v;
    };
    return Frame(2, {vec(1.0, 0.0), vec(r3, r23), vec(r3, r23 * w), vec(r3, r23 * std::conj(w))});
}

MuetfEnsemble single_frame_ensemble(Frame f, std::string label) {
    return MuetfEnsemble::certified({std::move(f)}, std::move(label));
}

// ---------------------------------------------------------------------------

ProbabilityVector outcome_probabilities(const Frame& f, const DensityMatrix& rho, bool allow_non_tight) {
    if (f.dim() != rho.dim()) {
        std::ostringstream os;
        os << "dimension mismatch: frame d=" << f.dim() << ", state d=" << rho.dim();
        throw ValidationError(os.str());
    }
    if (!f.is_tight() && !allow_non_tight) {
        throw ValidationError("frame is not tight; outcome probabilities would not normalize");
    }
    const double scale = static_cast<double>(f.dim()) / f.count();
    std::vector<double> p(static_cast<std::size_t>(f.count()));
    for (int j = 0; j < f.count(); ++j) {
        // Unchecked frames may carry non-unit vectors, so skip quadratic_form's norm gate.
        double q = f.vector(j).dot(rho.matrix() * f.vector(j)).real();
        if (q < 0.0 && q >= -tol::eigen_clamp) q = 0.0;
        p[j] = scale * q;
    }
    if (!f.is_tight()) return ProbabilityVector::unnormalized(std::move(p));
    return ProbabilityVector(std::move(p));
}

}  // namespace ucoh
