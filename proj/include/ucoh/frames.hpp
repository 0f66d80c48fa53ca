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
#include <string>
#include <vector>

#include "ucoh/spectra.hpp"
#include "ucoh/states.hpp"

namespace ucoh {

/// (N - d) / (d (N - 1)): squared overlap of distinct vectors in an
/// equiangular tight frame of N vectors in dimension d.
double etf_overlap(int d, int n);

/// Ordered list of N >= d vectors in C^d.
///
/// The checked constructor requires unit-norm vectors and a frame operator
/// of full rank. Frame::unchecked skips the norm and rank checks so that
/// defective input can still be certified and reported on.
class Frame {
public:
    Frame(int dim, std::vector<CVector> vectors);
    static Frame unchecked(int dim, std::vector<CVector> vectors);

    int dim() const noexcept { return dim_; }
    int count() const noexcept { return static_cast<int>(vectors_.size()); }
    const CVector& vector(int j) const { return vectors_.at(static_cast<std::size_t>(j)); }
    const std::vector<CVector>& vectors() const noexcept { return vectors_; }

    /// Smallest and largest eigenvalues of Sum_j |phi_j><phi_j|.
    double lower_frame_bound() const noexcept { return s0_; }
    double upper_frame_bound() const noexcept { return s1_; }

    /// Frame operator equals (N/d) I within the certification tolerance.
    bool is_tight() const noexcept;
    /// N = d and the vectors are pairwise orthogonal within tolerance.
    bool is_orthonormal() const;

    CMatrix frame_operator() const;

private:
    Frame(int dim, std::vector<CVector> vectors, bool check);

    int dim_;
    std::vector<CVector> vectors_;
    double s0_ = 0.0;
    double s1_ = 0.0;
};

/// Outcome distribution of a frame-induced POVM. Always nonnegative;
/// normalized() is false only for the explicit non-tight escape hatch.
class ProbabilityVector {
public:
    /// Validates: entries >= 0 (tiny negatives above -1e-12 are zeroed)
    /// and sum equal to 1 within 1e-10.
    explicit ProbabilityVector(std::vector<double> values);

    static ProbabilityVector unnormalized(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t j) const { return values_[j]; }
    const std::vector<double>& values() const noexcept { return values_; }
    bool normalized() const noexcept { return normalized_; }

private:
    ProbabilityVector() = default;
    std::vector<double> values_;
    bool normalized_ = true;
};

struct PairLocation {
    int member_a = -1;
    int index_a = -1;
    int member_b = -1;
    int index_b = -1;
};

struct MemberReport {
    int dim = 0;
    int count = 0;
    double s0 = 0.0;
    double s1 = 0.0;
    bool unit_norm = true;
    double norm_deviation = 0.0;
    int worst_norm_index = -1;
    bool tight = true;
    double tight_deviation = 0.0;   // max |eig(frame operator) - N/d|
    double overlap_target = 0.0;    // (N - d) / (d (N - 1))
    bool equiangular = true;
    double equiangular_deviation = 0.0;
    PairLocation worst_pair;

    bool passed() const noexcept { return unit_norm && tight && equiangular; }
};

struct CertificationReport {
    std::vector<MemberReport> members;
    bool cross_unbiased = true;     // vacuous for a single frame
    double cross_deviation = 0.0;   // max ||<phi_{mu,i}|phi_{nu,j}>|^2 - 1/d|
    PairLocation worst_cross;
    double tolerance = tol::certify;

    bool passed() const noexcept;
    std::string to_text() const;
};

/// Frames of common (d, N) intended to be pairwise mutually unbiased.
class MuetfEnsemble {
public:
    /// Throws ValidationError on an empty list or mismatched (d, N).
    explicit MuetfEnsemble(std::vector<Frame> members, std::string label = {});

    /// Constructs and attaches the verify_muetf report.
    static MuetfEnsemble certified(std::vector<Frame> members, std::string label = {});

    int dim() const noexcept { return members_.front().dim(); }
    int count() const noexcept { return members_.front().count(); }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    const Frame& member(int mu) const { return members_.at(static_cast<std::size_t>(mu)); }
    const std::vector<Frame>& members() const noexcept { return members_; }
    double coherence_constant() const noexcept { return etf_overlap(dim(), count()); }
    const std::string& label() const noexcept { return label_; }

    const std::optional<CertificationReport>& certification() const noexcept { return report_; }
    bool is_certified() const noexcept { return report_ && report_->passed(); }
    /// Throws UncertifiedError unless a passing report is attached.
    void require_certified() const;

private:
    std::vector<Frame> members_;
    std::string label_;
    std::optional<CertificationReport> report_;
};

Frame computational_basis(int d);

/// Hadamard basis, circular basis, computational basis (in that order).
MuetfEnsemble qubit_mub_triple();

/// d + 1 mutually unbiased bases for an odd prime d <= 31: the quadratic
/// phase bases <k|j;mu> = w^(mu k^2 + j k) / sqrt(d) for mu = 0..d-1,
/// followed by the computational basis.
MuetfEnsemble prime_mub_set(int d);

/// Regular simplex: the d + 1 standard basis vectors of C^(d+1) projected
/// onto the complement of the all-ones vector, normalized, and written in
/// the Helmert basis of that complement.
Frame simplex_etf(int d);

/// Qubit SIC: |0>, (|0> + sqrt2 w^k |1>)/sqrt3 for w^k in {1, w, w*}.
Frame qubit_sic();

/// Wraps a single frame as a certified M = 1 ensemble.
MuetfEnsemble single_frame_ensemble(Frame f, std::string label = {});

CertificationReport verify_frame(const Frame& f);
CertificationReport verify_muetf(const MuetfEnsemble& e);

/// p_j = (d/N) <phi_j|rho|phi_j>. Non-tight frames are rejected unless
/// allow_non_tight is set, in which case the result may be unnormalized.
ProbabilityVector outcome_probabilities(const Frame& f, const DensityMatrix& rho,
                                        bool allow_non_tight = false);

// Frame file I/O. Layout:
//   { "dim": d, "count": N, "frames": [ [ [ [re, im] x d ] x N ] x M ] }
std::string frames_to_json(const MuetfEnsemble& e);
MuetfEnsemble frames_from_json(const std::string& text, std::string label = {});
void save_frames(const MuetfEnsemble& e, const std::string& path);
MuetfEnsemble load_frames(const std::string& path);

}  // namespace ucoh
