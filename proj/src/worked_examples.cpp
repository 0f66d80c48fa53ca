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

#include "ucoh/worked_examples.hpp"

#include <cmath>
#include <numbers>

#include "ucoh/scalarfn.hpp"
#include "ucoh/spectra.hpp"

namespace ucoh::worked {

namespace {

using std::pow;
constexpr double sqrt2 = std::numbers::sqrt2;

// 1 - sqrt2 r1 is twice the smaller eigenvalue. At the pure endpoint rounding
// leaves it near 1e-16, and x^alpha turns that into ~1e-8, so apply the same
// resolution floor the eigensolver output gets.
double eig2(double x) { return x <= 2.0 * tol::eigen_resolution ? 0.0 : x; }

}  // namespace

double example1_coherence(double a, double v) {
    const double s = pow(1.0 - v, a) + pow(v + 1.0, a);
    return (2.0 - pow(2.0, 1.0 - a) * pow(s, a)) / (3.0 * a - 3.0 * a * a);
}

double example1_bound(double a, double v) {
    const double s = pow(1.0 - v, a) + pow(1.0 + v, a);
    const double x = 2.0 * (pow(1.0 - v * v, a) + pow(1.0 - v, 2.0 * a) + pow(v + 1.0, 2.0 * a)) /
                     (3.0 * s * s);
    const double brace = (a - 1.0) / a * big_L_gamma(x, 1.0 / a) + 1.0;
    return pow(s, a) / ((a - 1.0) * a * pow(2.0, a * a)) * pow(brace, a * a) - 1.0 / ((a - 1.0) * a);
}

double example2_coherence(double a, double r1) {
    const double p = pow(sqrt2 * r1 + 1.0, a);
    const double q = pow(eig2(1.0 - sqrt2 * r1), a);
    const double k = pow(2.0, -a - 0.5);
    const double ia = 1.0 / a;
    const double t0 = pow(3.0, ia) * pow(k * ((sqrt2 + 1.0) * p + (sqrt2 - 1.0) * q), ia);
    const double t12 = 2.0 * pow(k * ((2.0 * sqrt2 - 1.0) * p + (4.0 * sqrt2 + 1.0) * q), ia);
    const double t3 = pow(k * ((5.0 * sqrt2 - 1.0) * p + (sqrt2 + 1.0) * q), ia);
    const double inner = pow(12.0, -ia) * (t0 + t12 + t3);
    return 1.0 / ((1.0 - a) * a) * (pow(inner, -a * a) - 1.0);
}

double example2_bound(double a, double r1) {
    const double up = sqrt2 * r1 + 1.0;
    const double dn = eig2(1.0 - sqrt2 * r1);
    const double s = pow(up, a) + pow(dn, a);
    const double x = (pow(up * dn, a) + pow(up, 2.0 * a) + pow(dn, 2.0 * a)) / (3.0 * s * s);
    const double brace = (a - 1.0) / a * big_L_gamma(x, 1.0 / a) + 1.0;
    return pow(2.0, a * a) * pow(brace, -a * a) / ((1.0 - a) * a * pow(s, a)) - 1.0 / ((1.0 - a) * a);
}

}  // namespace ucoh::worked
