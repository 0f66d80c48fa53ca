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

// Drivers behind the command-line tool: worked-example grids, parameter
// scans, randomized inequality sweeps and the spec-string parsers for
// states and ensembles. Every driver is deterministic for a fixed seed
// and writes CSV rows in grid order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ucoh/bounds.hpp"
#include "ucoh/coherence.hpp"
#include "ucoh/frames.hpp"
#include "ucoh/states.hpp"

namespace ucoh {

inline constexpr const char* version_string = "1.0.0";

// Acceptance tolerances shared by the drivers and the test suites.
namespace tol {
inline constexpr double closed_form = 1e-9;  // closed form vs pipeline
inline constexpr double gap = 1e-9;          // averaged coherence >= bound - gap
inline constexpr double nonnegative = 1e-10; // bound >= -nonnegative
inline constexpr double lemma2 = 1e-12;
}  // namespace tol

/// mub2 | mub-prime-D | simplex-D | sic2 | file:PATH
MuetfEnsemble parse_ensemble_spec(const std::string& spec);

/// mixed | pure:VEC | pseudopure:V | bloch:R1,R2,R3 | random
/// VEC is a comma-separated list of complex entries written as
/// "a", "a+bi", "a-bi" or "bi"; it is normalized before use.
DensityMatrix parse_state_spec(const std::string& spec, int dim, std::uint64_t seed);

/// 12 significant digits, as used in every CSV cell and single-value output.
std::string format_value(double x);

struct ExampleGrid {
    int alpha_steps = 81;
    double epsilon = 1e-4;  // alpha capped at 1 - epsilon
    int x_steps = 101;      // v for example 1, r1 for example 2

    std::vector<double> alphas() const;
};

struct ExampleSummary {
    std::size_t rows = 0;
    double max_gap = 0.0;
    double min_gap = 0.0;
    double max_closed_deviation = 0.0;  // max over cells of |closed - pipeline|
    std::string min_gap_cell;
    std::string closed_deviation_cell;
};

/// Writes rows alpha,v,lhs_closed,lhs_pipeline,bound_closed,bound_pipeline,gap.
/// Never throws on a bad cell; pass the summary to require_passed.
ExampleSummary run_example1(const ExampleGrid& grid, std::ostream& csv);

/// Same scheme with r1 in [0, 1/sqrt2].
ExampleSummary run_example2(const ExampleGrid& grid, std::ostream& csv);

/// DiscrepancyError if a closed form disagrees with the pipeline beyond
/// 1e-9, otherwise ViolationError if a gap falls below -1e-9.
void require_passed(const ExampleSummary& s);

struct GridAxis {
    std::string name;  // alpha | beta | v | r1
    double start = 0.0;
    double stop = 1.0;
    int steps = 2;

    std::vector<double> points() const;
};

struct ScanSpec {
    std::vector<GridAxis> axes;  // empty: single point
    double alpha = 0.5;
    double beta = 1.0;
    std::string state = "mixed";
    std::string ensemble = "mub2";
    std::uint64_t seed = 0;
};

struct ScanSummary {
    std::size_t rows = 0;
    double min_gap = 0.0;
    std::size_t violations = 0;
};

/// Rows: one column per axis, then alpha,beta,branch,avg_coherence,bound,gap
/// (alpha and beta are omitted from the leading block when they are axes).
/// A v axis selects pseudopure(v), an r1 axis selects bloch(r1, 0, r1).
ScanSummary run_scan(const ScanSpec& spec, std::ostream& csv);

/// ViolationError if any grid point had a negative gap.
void require_passed(const ScanSummary& s);

struct RandomTestSpec {
    std::vector<std::string> ensembles{"mub2"};
    std::vector<Branch> branches{Branch::B1, Branch::B2, Branch::B3};
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

/// The (alpha, beta) grid exercised for one branch.
std::vector<CoherenceParams> sweep_grid(Branch b);

struct SweepRecord {
    std::string ensemble;
    double alpha = 0.0;
    double beta = 0.0;
    double coherence = 0.0;
    double bound = 0.0;
    CMatrix state;
};

struct RandomTestReport {
    std::size_t states = 0;
    std::size_t evaluations = 0;
    std::size_t violations = 0;         // coherence < bound - 1e-9
    std::size_t negative_bounds = 0;    // bound < -1e-10
    std::size_t lemma2_violations = 0;  // averaged IoC > rhs + 1e-12
    std::size_t clamped_braces = 0;
    double min_gap = 0.0;
    double min_bound = 0.0;
    double max_lemma2_excess = 0.0;
    std::optional<SweepRecord> argmin;
    std::vector<SweepRecord> failures;  // first few offenders

    bool passed() const noexcept { return violations == 0 && negative_bounds == 0 && lemma2_violations == 0; }
    std::string to_text() const;
};

/// Ginibre samples (seeded per index) plus a tenth as many Haar-random pure
/// states and |0><0|, checked against every ensemble and branch grid point.
RandomTestReport run_random_test(const RandomTestSpec& spec);

/// JSON rendering of a matrix as [[[re, im], ...], ...] with 17 digits.
std::string matrix_to_json(const CMatrix& m);

/// Sidecar record next to an output file: command, parameters, seed,
/// version and summary numbers.
void write_run_record(const std::string& path, const std::string& command,
                      const std::string& params_json, const std::string& summary_json);

}  // namespace ucoh
