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
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "ucoh/bounds.hpp"
#include "ucoh/error.hpp"
#include "ucoh/scalarfn.hpp"
#include "ucoh/worked_examples.hpp"

namespace ucoh {
namespace {

struct Case {
    const char* name;
    MuetfEnsemble ensemble;
};

std::vector<Case> ensembles() {
    std::vector<Case> out;
    out.push_back({"mub2", qubit_mub_triple()});
    out.push_back({"mub3", prime_mub_set(3)});
    out.push_back({"mub5", prime_mub_set(5)});
    out.push_back({"sic2", single_frame_ensemble(qubit_sic())});
    for (int d = 2; d <= 6; ++d) out.push_back({"simplex", single_frame_ensemble(simplex_etf(d))});
    return out;
}

std::vector<CoherenceParams> params_grid() {
    std::vector<CoherenceParams> p;
    for (double a : {0.5, 0.6, 0.75, 0.9, 0.99})
        for (double b : {-4.0, -1.0, -0.3, 0.2, 0.5, 1.0}) p.emplace_back(a, b);
    for (double a : {0.05, 0.2, 0.35, 0.49})
        for (double b : {-4.0, -1.0, -0.3, 0.2, 0.5, 1.0}) p.emplace_back(a, b);
    return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TEST(Shape, DerivedConstants) {
    const EnsembleShape mub(2, 2, 3);
    EXPECT_EQ(mub.c(), 0.0);
    EXPECT_EQ(mub.s(), 1.0);
    const EnsembleShape sic(2, 4, 1);
    EXPECT_NEAR(sic.c(), 1.0 / 3, 1e-15);
    EXPECT_EQ(sic.s(), 2.0);
    EXPECT_THROW(EnsembleShape(2, 1, 1), ValidationError);
    EXPECT_THROW(EnsembleShape(2, 2, 0), ValidationError);
    EXPECT_THROW(EnsembleShape(0, 2, 1), ValidationError);
    const auto m5 = EnsembleShape::of(prime_mub_set(5));
    EXPECT_EQ(m5.d, 5);
    EXPECT_EQ(m5.n, 5);
    EXPECT_EQ(m5.m, 6);
}

TEST(CoincidenceRhs, SpecExamples) {
    EXPECT_NEAR(lemma2_rhs(maximally_mixed(2), {2, 2, 3}), 0.5, 1e-15);
    EXPECT_NEAR(lemma2_rhs(maximally_mixed(3), {3, 4, 1}), 0.25, 1e-15);
    const auto zero = from_pure(CVector::Unit(2, 0));
    EXPECT_NEAR(lemma2_rhs(zero, {2, 2, 3}), 2.0 / 3, 1e-15);
    EXPECT_NEAR(lemma2_rhs(zero, {2, 4, 1}), 1.0 / 3, 1e-15);
    EXPECT_THROW(lemma2_rhs(zero, {3, 3, 4}), ValidationError);
}

TEST(CoincidenceRhs, AveragedCoincidenceBelowRhs) {
    for (const auto& c : ensembles()) {
        const auto shape = EnsembleShape::of(c.ensemble);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto rho = seed % 4 == 0 ? random_pure_state(shape.d, seed) : random_state(shape.d, seed);
            double ioc = 0.0;
            for (const Frame& f : c.ensemble.members()) ioc += index_of_coincidence(outcome_probabilities(f, rho));
            ioc /= shape.m;
            EXPECT_LE(ioc, lemma2_rhs(rho, shape) + 1e-12) << c.name << " d=" << shape.d;
        }
    }
}

TEST(XArgument, SpecExamples) {
    for (const auto& c : ensembles()) {
        const auto shape = EnsembleShape::of(c.ensemble);
        EXPECT_NEAR(x_argument(maximally_mixed(shape.d), shape, 0.4), 1.0 / shape.n, 1e-14);
        const double pure = (1 - shape.c()) * (shape.d - 1) / (shape.m * shape.n * shape.s()) + 1.0 / shape.n;
        EXPECT_NEAR(x_argument(from_pure(CVector::Unit(shape.d, 0)), shape, 0.7), pure, 1e-14);
    }
    for (double v : {0.25, 0.5, 0.9})
        for (double a : {0.5, 0.8}) {
            const double s = std::pow(1 - v, a) + std::pow(1 + v, a);
            const double closed =
                2 * (std::pow(1 - v * v, a) + std::pow(1 - v, 2 * a) + std::pow(1 + v, 2 * a)) / (3 * s * s);
            EXPECT_NEAR(x_argument(pseudopure(v), {2, 2, 3}, a), closed, 1e-14);
        }
    EXPECT_THROW(x_argument(maximally_mixed(2), {2, 2, 3}, 1.0), DomainError);
}

TEST(LowerBound, MatchesDirectTranscription) {
    for (const auto& c : ensembles()) {
        const auto sh = EnsembleShape::of(c.ensemble);
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const auto rho = random_state(sh.d, seed);
            const CMatrix& m = rho.matrix();
            for (const auto& p : params_grid()) {
                const double a = p.alpha(), b = p.beta();
                const auto r = theorem1_bound(rho, sh, p);
                EXPECT_EQ(r.branch, p.branch());
                double expect = 0.0;
                switch (p.branch()) {
                    case Branch::B1: expect = oracle::item1(m, sh.d, sh.n, sh.m, a, b); break;
                    case Branch::B2: expect = oracle::item2(m, sh.d, sh.n, sh.m, a, b); break;
                    case Branch::B3: expect = oracle::item3(m, sh.d, sh.n, sh.m, a, b); break;
                    case Branch::Renyi: break;
                }
                EXPECT_LT(rel(r.value, expect), 1e-11) << c.name << " a=" << a << " b=" << b;
                EXPECT_GT(r.brace, 0.0);
                EXPECT_LE(r.brace, 1.0 + 1e-12);
                EXPECT_FALSE(r.brace_clamped);
            }
        }
    }
}

TEST(LowerBound, RejectsRenyiParams) {
    EXPECT_THROW(theorem1_bound(maximally_mixed(2), {2, 2, 3}, CoherenceParams(0.6, 0.0)), DomainError);
    EXPECT_THROW(pure_state_bounds({2, 2, 3}, CoherenceParams(0.6, 0.0)), DomainError);
}

TEST(LowerBound, MaximallyMixedGivesZero) {
    for (const auto& c : ensembles()) {
        const auto sh = EnsembleShape::of(c.ensemble);
        if (sh.n != sh.d) continue;
        for (const auto& p : params_grid())
            EXPECT_NEAR(theorem1_bound(maximally_mixed(sh.d), sh, p).value, 0.0, 1e-12) << c.name;
        EXPECT_NEAR(corollary4_renyi_bound(maximally_mixed(sh.d), sh, 0.7), 0.0, 1e-12);
        EXPECT_NEAR(corollary4_renyi_bound(maximally_mixed(sh.d), sh, 0.3), 0.0, 1e-12);
    }
    // orthonormal ensembles are tight there: coherence is also zero
    for (const auto& p : params_grid())
        EXPECT_NEAR(avg_coherence(qubit_mub_triple(), maximally_mixed(2), p), 0.0, 1e-10);
}

std::vector<CoherenceParams> acceptance_grid() {
    std::vector<CoherenceParams> p;
    for (double a : {0.5, 0.7, 0.9})
        for (double b : {-3.0, -1.0, -0.2, 0.3, 1.0}) p.emplace_back(a, b);
    for (double a : {0.1, 0.3, 0.45})
        for (double b : {-3.0, -0.5, 0.3, 1.0}) p.emplace_back(a, b);
    return p;
}

TEST(LowerBound, NonnegativeOnSweep) {
    for (const auto& c : ensembles()) {
        const auto sh = EnsembleShape::of(c.ensemble);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto rho = seed < 5 ? random_pure_state(sh.d, seed) : random_state(sh.d, seed);
            for (const auto& p : acceptance_grid()) {
                const auto r = theorem1_bound(rho, sh, p);
                EXPECT_GE(r.value, -1e-10) << c.name << " d=" << sh.d << " seed=" << seed << " a=" << p.alpha()
                                           << " b=" << p.beta();
                EXPECT_FALSE(r.chord_clamped);
            }
        }
    }
}

// With exponents close to 1 the bound can be negative: here tr rho^a > 1 is
// not compensated by the brace. Reference value from an independent numpy
// evaluation on the same spectrum.
TEST(LowerBound, NegativeBoundNearAlphaOne) {
    const auto rho = random_state(6, 15);
    const EnsembleShape sh(6, 7, 1);
    const auto r = theorem1_bound(rho, sh, {0.99, 1.0});
    EXPECT_NEAR(r.value, -0.0217070131062, 1e-11);
    EXPECT_NEAR(r.value, oracle::item1(rho.matrix(), 6, 7, 1, 0.99, 1.0), 1e-13);
    EXPECT_GT(avg_coherence(single_frame_ensemble(simplex_etf(6)), rho, {0.99, 1.0}), r.value);
    // the same state drives the item-(3) chord argument below zero
    const auto b3 = theorem1_bound(rho, sh, {0.01, 0.5});
    EXPECT_LT(b3.chord_argument, 0.0);
    EXPECT_TRUE(b3.chord_clamped);
    EXPECT_EQ(b3.value, 0.0);
}

TEST(LowerBound, B1HoldsOnSweep) {
    double worst = 1.0;
    for (const auto& c : ensembles()) {
        const auto sh = EnsembleShape::of(c.ensemble);
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const auto rho = seed < 6 ? random_pure_state(sh.d, seed) : random_state(sh.d, seed);
            for (const auto& p : params_grid()) {
                if (p.branch() != Branch::B1) continue;
                worst = std::min(worst, avg_coherence(c.ensemble, rho, p) - theorem1_bound(rho, sh, p).value);
            }
        }
    }
    EXPECT_GE(worst, -1e-9);
}

TEST(LowerBound, B3ChordBelowGenerator) {
    const auto sh = EnsembleShape(3, 3, 4);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto rho = random_state(3, seed);
        for (double a : {0.1, 0.3, 0.45})
            for (double b : {0.2, 0.6, 1.0}) {
                const CoherenceParams p(a, b);
                const auto r = theorem1_bound(rho, sh, p);
                EXPECT_GE(r.chord_argument, -1e-10);
                EXPECT_LE(r.value, chord_generator_f(std::max(r.chord_argument, 0.0), ChordParams(a, b)) + 1e-15);
            }
    }
}

// Item (2) fails here: the averaged coherence sits below the bound. The
// step C_{alpha,beta} >= C_{1-alpha,beta} used to reach it does not hold
// for beta < 0. Reference numbers come from an independent numpy evaluation.
TEST(LowerBound, B2CounterexampleOnQubitMubs) {
    const auto mub = qubit_mub_triple();
    const auto rho = bloch_qubit(0.9, 0, 0);
    const CoherenceParams p(0.3, -0.5);
    const double lhs = avg_coherence(mub, rho, p);
    const double rhs = theorem1_bound(rho, EnsembleShape::of(mub), p).value;
    EXPECT_NEAR(lhs, 0.153068627597, 1e-11);
    EXPECT_NEAR(rhs, 0.262512353381, 1e-11);
    EXPECT_LT(lhs, rhs);
    EXPECT_NEAR(rhs, oracle::item2(rho.matrix(), 2, 2, 3, 0.3, -0.5), 1e-13);
    EXPECT_LT(avg_coherence(mub, rho, p), avg_coherence(mub, rho, CoherenceParams(0.7, -0.5)));
}

TEST(MubBound, MubForm) {
    for (int d : {2, 3, 5}) {
        const int m = d + 1;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto rho = random_state(d, seed);
            for (const auto& p : {CoherenceParams(0.5, 0.5), CoherenceParams(0.8, -2.0), CoherenceParams(0.3, 0.4)}) {
                const auto r = corollary1_mub_bound(rho, d, m, p);
                EXPECT_EQ(r.value, theorem1_bound(rho, {d, d, m}, p).value);
                if (p.branch() == Branch::B1)
                    EXPECT_LT(rel(r.value, oracle::mub_b1_form(rho.matrix(), d, m, p.alpha(), p.beta())), 1e-12);
            }
        }
    }
    EXPECT_NEAR(corollary1_mub_bound(maximally_mixed(2), 2, 3, CoherenceParams(0.6, 0.6)).value, 0.0, 1e-12);
}

TEST(MubBound, NearAlphaOneIsContinuous) {
    const auto rho = random_state(2, 3);
    const double near = corollary1_mub_bound(rho, 2, 3, CoherenceParams(1 - 1e-6, 1.0)).value;
    const double nearer = corollary1_mub_bound(rho, 2, 3, CoherenceParams(1 - 1e-7, 1.0)).value;
    EXPECT_TRUE(std::isfinite(near));
    EXPECT_NEAR(near, nearer, 1e-5);
    EXPECT_GE(near, 0.0);
}

TEST(EtfBound, SingleFrame) {
    const EnsembleShape sic(2, 4, 1);
    const auto rho = random_state(2, 9);
    const CoherenceParams p(0.6, -0.6);
    EXPECT_EQ(corollary2_etf_bound(rho, sic, p).value, theorem1_bound(rho, sic, p).value);
    EXPECT_THROW(corollary2_etf_bound(rho, {2, 2, 3}, p), ValidationError);
    const double r = 1 / std::numbers::sqrt2;
    for (double a = 0.5; a < 1.0; a += 0.05)
        for (double r1 = 0.0; r1 <= r; r1 += r / 20) {
            const double rr = std::min(r1, r);
            EXPECT_NEAR(corollary2_etf_bound(bloch_qubit(rr, 0, rr), sic, CoherenceParams(a, -a)).value,
                        worked::example2_bound(a, rr), 1e-10);
        }
}

TEST(TsallisBound, TsallisIsBetaOne) {
    const EnsembleShape sh(3, 3, 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto rho = random_state(3, seed);
        EXPECT_EQ(corollary3_tsallis_bound(rho, sh, 0.7).value, theorem1_bound(rho, sh, {0.7, 1.0}).value);
        const auto b3 = corollary3_tsallis_bound(rho, sh, 0.3);
        EXPECT_EQ(b3.branch, Branch::B3);
        EXPECT_EQ(b3.value, theorem1_bound(rho, sh, {0.3, 1.0}).value);
    }
    EXPECT_NEAR(corollary3_tsallis_bound(maximally_mixed(2), {2, 2, 3}, 0.6).value, 0.0, 1e-12);
}

TEST(RenyiBound, FiniteBetaLimit) {
    for (const auto& c : ensembles()) {
        const auto sh = EnsembleShape::of(c.ensemble);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto rho = random_state(sh.d, seed);
            for (double a : {0.6, 0.9}) {
                const double r = corollary4_renyi_bound(rho, sh, a);
                EXPECT_NEAR(theorem1_bound(rho, sh, {a, 1e-6}).value, r, 1e-5);
                EXPECT_NEAR(theorem1_bound(rho, sh, {a, -1e-6}).value, r, 1e-5);
            }
            // below 1/2 the Renyi item is the beta -> 0 limit of item (2)
            const double r = corollary4_renyi_bound(rho, sh, 0.3);
            EXPECT_NEAR(theorem1_bound(rho, sh, {0.3, -1e-6}).value, r, 1e-5);
        }
    }
    EXPECT_THROW(corollary4_renyi_bound(maximally_mixed(2), {2, 2, 3}, 1.0), DomainError);
}

TEST(RenyiBound, PureStateLogForm) {
    const EnsembleShape sh(2, 4, 1);
    const auto zero = from_pure(CVector::Unit(2, 0));
    const double x = (1 - sh.c()) * (sh.d - 1) / (sh.m * sh.n * sh.s()) + 1.0 / sh.n;
    for (double a : {0.55, 0.8}) {
        const double brace = (a - 1) / a * oracle::big_L(x, 1 / a) + 1;
        EXPECT_NEAR(corollary4_renyi_bound(zero, sh, a), a / (a - 1) * std::log(brace), 1e-12);
    }
}

TEST(PureStateBounds, MatchGeneralBoundOnBasisState) {
    for (const auto& c : ensembles()) {
        const auto sh = EnsembleShape::of(c.ensemble);
        const auto zero = from_pure(CVector::Unit(sh.d, 0));
        for (const auto& p : params_grid()) {
            const auto pb = pure_state_bounds(sh, p);
            EXPECT_NEAR(pb.for_branch(p.branch()), theorem1_bound(zero, sh, p).value, 1e-12) << c.name;
            EXPECT_NEAR(pb.x, x_argument(zero, sh, p.alpha() >= 0.5 ? p.alpha() : 1 - p.alpha()), 1e-14);
        }
    }
    const auto b2only = pure_state_bounds({2, 2, 3}, {0.3, -1.0});
    EXPECT_TRUE(b2only.b2.has_value());
    EXPECT_FALSE(b2only.b3.has_value());
    EXPECT_THROW(b2only.for_branch(Branch::B3), DomainError);
}

TEST(PureStateBounds, ExampleEndpoints) {
    EXPECT_NEAR(pure_state_bounds({2, 2, 3}, {0.5, 0.5}).for_branch(Branch::B1), worked::example1_bound(0.5, 1.0),
                1e-12);
    EXPECT_NEAR(pure_state_bounds({2, 4, 1}, {0.5, -0.5}).for_branch(Branch::B1),
                worked::example2_bound(0.5, 1 / std::numbers::sqrt2), 1e-10);
}

TEST(LowerBound, PseudopureClosedForm) {
    for (double a = 0.5; a < 1.0; a += 0.05)
        for (double v = 0.0; v <= 1.0 + 1e-12; v += 0.05) {
            const double vv = std::min(v, 1.0);
            EXPECT_NEAR(theorem1_bound(pseudopure(vv), {2, 2, 3}, {a, a}).value, worked::example1_bound(a, vv), 1e-10);
        }
}

TEST(LowerBound, Dispatch) {
    const auto rho = random_state(2, 1);
    const EnsembleShape sh(2, 2, 3);
    EXPECT_EQ(lower_bound(rho, sh, {0.6, 0.0}), corollary4_renyi_bound(rho, sh, 0.6));
    EXPECT_EQ(lower_bound(rho, sh, {0.6, 0.5}), theorem1_bound(rho, sh, {0.6, 0.5}).value);
    EXPECT_EQ(averaged_coherence(qubit_mub_triple(), rho, {0.6, 0.0}), avg_renyi_coherence(qubit_mub_triple(), rho, 0.6));
}

}  // namespace
}  // namespace ucoh
