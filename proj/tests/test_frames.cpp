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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "ucoh/error.hpp"
#include "ucoh/frames.hpp"
#include "ucoh/scalarfn.hpp"

namespace ucoh {
namespace {

double overlap2(const CVector& a, const CVector& b) { return std::norm(a.dot(b)); }

double povm_defect(const Frame& f) {
    CMatrix s = CMatrix::Zero(f.dim(), f.dim());
    for (const auto& v : f.vectors()) s += v * v.adjoint();
    s *= static_cast<double>(f.dim()) / f.count();
    return (s - CMatrix::Identity(f.dim(), f.dim())).cwiseAbs().maxCoeff();
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("ucoh_test_" + name)).string();
}

TEST(ComputationalBasis, Orthonormal) {
    for (int d : {2, 3, 7}) {
        const Frame f = computational_basis(d);
        EXPECT_EQ(f.count(), d);
        EXPECT_TRUE(f.is_orthonormal());
        EXPECT_TRUE(f.is_tight());
        EXPECT_TRUE(verify_frame(f).passed());
        for (int k = 0; k < d; ++k) EXPECT_EQ(f.vector(k), CVector::Unit(d, k));
    }
    EXPECT_THROW(computational_basis(1), ValidationError);
}

TEST(QubitMubTriple, OrderAndOverlaps) {
    const auto e = qubit_mub_triple();
    ASSERT_EQ(e.size(), 3);
    const double s = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(e.member(0).vector(1)(1) + s), 0.0, 1e-15);  // (|0> - |1>)/sqrt2
    EXPECT_NEAR(std::abs(e.member(1).vector(0)(1) - Complex(0, s)), 0.0, 1e-15);
    EXPECT_EQ(e.member(2).vector(0), CVector::Unit(2, 0));
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    const double o = overlap2(e.member(mu).vector(i), e.member(nu).vector(j));
                    if (mu != nu) EXPECT_NEAR(o, 0.5, 1e-15);
                    else if (i != j) EXPECT_NEAR(o, 0.0, 1e-15);
                }
    EXPECT_TRUE(e.is_certified());
    EXPECT_EQ(e.coherence_constant(), 0.0);
}

TEST(PrimeMubSet, CountsAndCertification) {
    const auto m3 = prime_mub_set(3);
    EXPECT_EQ(m3.size(), 4);
    EXPECT_TRUE(m3.is_certified());
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    EXPECT_NEAR(overlap2(m3.member(mu).vector(i), m3.member(nu).vector(j)), 1.0 / 3, 1e-12);
    EXPECT_EQ(prime_mub_set(5).size(), 6);
    for (int p : {7, 11, 13, 31}) EXPECT_TRUE(prime_mub_set(p).is_certified()) << p;
    EXPECT_THROW(prime_mub_set(4), DomainError);
    EXPECT_THROW(prime_mub_set(2), DomainError);
    EXPECT_THROW(prime_mub_set(9), DomainError);
    EXPECT_THROW(prime_mub_set(37), DomainError);
}

TEST(SimplexEtf, Equiangular) {
    for (int d = 2; d <= 16; ++d) {
        const Frame f = simplex_etf(d);
        EXPECT_EQ(f.count(), d + 1);
        const double c = etf_overlap(d, d + 1);
        EXPECT_NEAR(c, 1.0 / (d * d), 1e-15);
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) EXPECT_NEAR(overlap2(f.vector(i), f.vector(j)), c, 1e-12);
        EXPECT_NEAR(f.lower_frame_bound(), (d + 1.0) / d, 1e-12);
        EXPECT_NEAR(f.upper_frame_bound(), (d + 1.0) / d, 1e-12);
        EXPECT_TRUE(verify_frame(f).passed());
        EXPECT_LT(povm_defect(f), 1e-12);
    }
}

TEST(QubitSic, OverlapsAndFrameOperator) {
    const Frame f = qubit_sic();
    ASSERT_EQ(f.count(), 4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) EXPECT_NEAR(overlap2(f.vector(i), f.vector(j)), 1.0 / 3, 1e-12);
    EXPECT_LT((f.frame_operator() - 2.0 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(povm_defect(f), 1e-12);
    // fiducial vectors as printed
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    EXPECT_NEAR(std::abs(f.vector(2)(1) - std::sqrt(2.0 / 3) * w), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.vector(3)(1) - std::sqrt(2.0 / 3) * std::conj(w)), 0.0, 1e-15);
}

TEST(VerifyFrame, ScaledVectorReported) {
    auto vs = simplex_etf(2).vectors();
    vs[1] *= 0.9;
    const auto r = verify_frame(Frame::unchecked(2, vs));
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.members[0].unit_norm);
    EXPECT_EQ(r.members[0].worst_norm_index, 1);
    EXPECT_NEAR(r.members[0].norm_deviation, 0.1, 1e-12);
    EXPECT_THROW(Frame(2, vs), ValidationError);
}

TEST(VerifyFrame, ComputationalBasisC0) {
    const auto r = verify_frame(computational_basis(3));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.members[0].overlap_target, 0.0);
}

TEST(VerifyMuetf, DuplicateBasisFailsCrossCheck) {
    const MuetfEnsemble twice({computational_basis(2), computational_basis(2)});
    const auto r = verify_muetf(twice);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.cross_unbiased);
    EXPECT_NEAR(r.cross_deviation, 0.5, 1e-15);
    EXPECT_EQ(r.worst_cross.member_a, 0);
    EXPECT_EQ(r.worst_cross.member_b, 1);
    const auto e = MuetfEnsemble::certified({computational_basis(2), computational_basis(2)});
    EXPECT_FALSE(e.is_certified());
    EXPECT_THROW(e.require_certified(), UncertifiedError);
}

TEST(VerifyMuetf, DimensionMismatch) {
    try {
        MuetfEnsemble bad({computational_basis(2), computational_basis(3)});
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("dimension mismatch"), std::string::npos);
    }
}

TEST(OutcomeProbabilities, SpecExamples) {
    const auto mixed = DensityMatrix(CMatrix(CMatrix::Identity(2, 2) / 2.0));
    const auto p = outcome_probabilities(qubit_sic(), mixed);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(p[j], 0.25, 1e-15);
    EXPECT_DOUBLE_EQ(index_of_coincidence(p), 0.25);

    const auto zero = from_pure(CVector::Unit(2, 0));
    const auto q = outcome_probabilities(qubit_sic(), zero);
    const double expect[4] = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(q[j], expect[j], 1e-15);

    const auto r = outcome_probabilities(computational_basis(2), zero);
    EXPECT_EQ(r[0], 1.0);
    EXPECT_EQ(r[1], 0.0);
}

TEST(OutcomeProbabilities, NormalizedForTightFrames) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (int d : {2, 3, 4}) {
            const auto rho = random_state(d, seed);
            for (const Frame& f : {simplex_etf(d), computational_basis(d)}) {
                const auto p = outcome_probabilities(f, rho);
                const double s = std::accumulate(p.values().begin(), p.values().end(), 0.0);
                EXPECT_NEAR(s, 1.0, 1e-10);
                for (double v : p.values()) EXPECT_GE(v, 0.0);
            }
        }
    }
}

TEST(OutcomeProbabilities, NonTightNeedsFlag) {
    std::vector<CVector> vs{CVector::Unit(2, 0), CVector::Unit(2, 1), CVector::Unit(2, 0)};
    const Frame f(2, vs);
    EXPECT_FALSE(f.is_tight());
    const auto rho = from_pure(CVector::Unit(2, 0));
    EXPECT_THROW(outcome_probabilities(f, rho), ValidationError);
    const auto p = outcome_probabilities(f, rho, true);
    EXPECT_FALSE(p.normalized());
    EXPECT_THROW(outcome_probabilities(simplex_etf(3), rho), ValidationError);
}

TEST(ProbabilityVectorType, Validation) {
    EXPECT_THROW(ProbabilityVector({0.5, 0.6}), ValidationError);
    EXPECT_THROW(ProbabilityVector({1.2, -0.2}), ValidationError);
    const ProbabilityVector p({1.0 + 1e-13, -1e-13});
    EXPECT_EQ(p[1], 0.0);
}

TEST(FrameFiles, RoundTrip) {
    const auto path = temp_path("sic.json");
    const auto sic = single_frame_ensemble(qubit_sic(), "sic2");
    save_frames(sic, path);
    const auto back = load_frames(path);
    EXPECT_TRUE(back.is_certified());
    for (int j = 0; j < 4; ++j)
        EXPECT_LE((back.member(0).vector(j) - sic.member(0).vector(j)).cwiseAbs().maxCoeff(), 1e-15);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            EXPECT_EQ(overlap2(back.member(0).vector(i), back.member(0).vector(j)),
                      overlap2(sic.member(0).vector(i), sic.member(0).vector(j)));
    const auto mub = prime_mub_set(5);
    save_frames(mub, path);
    EXPECT_TRUE(load_frames(path).is_certified());
    std::remove(path.c_str());
}

TEST(FrameFiles, SchemaErrors) {
    // a 3-vector in a d = 2 ensemble
    EXPECT_THROW(frames_from_json(R"({"dim":2,"count":2,"frames":[[[[1,0],[0,0],[0,0]],[[0,0],[1,0]]]]})"),
                 SchemaError);
    EXPECT_THROW(frames_from_json(R"({"dim":2,"count":2,"frames":[],"extra":1})"), SchemaError);
    EXPECT_THROW(frames_from_json(R"({"dim":2,"frames":[]})"), SchemaError);
    EXPECT_THROW(frames_from_json("not json"), SchemaError);
    EXPECT_THROW(frames_from_json(R"({"dim":2,"count":2,"frames":[[[[1,0],[0,0]],[[0,0],[0.5,0]]]]})"),
                 ValidationError);
    EXPECT_THROW(load_frames("/nonexistent/dir/frames.json"), IoError);
}

TEST(FrameFiles, HandWrittenMuetfGetsReport) {
    const std::string text = R"({
      "dim": 2, "count": 2,
      "frames": [
        [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
        [[[0.70710678118654752, 0], [0.70710678118654752, 0]], [[0.70710678118654752, 0], [-0.70710678118654752, 0]]]
      ]})";
    const auto e = frames_from_json(text, "hand");
    ASSERT_TRUE(e.certification().has_value());
    EXPECT_TRUE(e.is_certified());
    EXPECT_EQ(e.size(), 2);

    const std::string skew = R"({
      "dim": 2, "count": 2,
      "frames": [
        [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
        [[[0.8, 0], [0.6, 0]], [[0.6, 0], [-0.8, 0]]]
      ]})";
    const auto bad = frames_from_json(skew, "skew");
    EXPECT_FALSE(bad.is_certified());
    const std::string text_report = bad.certification()->to_text();
    EXPECT_NE(text_report.find("worst"), std::string::npos) << text_report;
    EXPECT_NEAR(bad.certification()->cross_deviation, 0.64 - 0.5, 1e-12);
}

}  // namespace
}  // namespace ucoh
