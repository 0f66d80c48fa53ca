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

#include "ucoh/scalarfn.hpp"

#include <cmath>
#include <sstream>

#include "ucoh/error.hpp"

namespace ucoh {

namespace {

void require_normalized(const ProbabilityVector& p) {
    if (!p.normalized()) throw ValidationError("probability vector is not normalized");
}

}  // namespace

double gamma_log(double x, double gamma) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << "gamma_log needs x > 0, got " << x;
        throw DomainError(os.str());
    }
    if (std::abs(gamma - 1.0) < 1e-8) return std::log(x);
    return std::expm1((1.0 - gamma) * std::log(x)) / (1.0 - gamma);
}

double tsallis_entropy(const ProbabilityVector& p, double gamma) {
    require_normalized(p);
    if (!(gamma > 0.0)) throw DomainError("Tsallis entropy needs gamma > 0");
    double h = 0.0;
    for (double pj : p.values())
        if (pj > 0.0) h += pj * gamma_log(1.0 / pj, gamma);
    return h;
}

double index_of_coincidence(const ProbabilityVector& p) {
    require_normalized(p);
    double s = 0.0;
    for (double pj : p.values()) s += pj * pj;
    return s;
}

double big_L_gamma(double x, double gamma) {
    if (!(x > 0.0) || x > 1.0 + 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "L_gamma argument " << x << " outside (0, 1]";
        throw DomainError(os.str());
    }
    if (!(gamma > 0.0 && gamma <= 2.0)) {
        std::ostringstream os;
        os << "L_gamma needs gamma in (0, 2], got " << gamma;
        throw DomainError(os.str());
    }
    x = std::min(x, 1.0);
    // The chords agree at shared knots, so rounding in floor(1/x) near
    // x = 1/k only moves the evaluation onto the neighbouring chord.
    const double k = std::floor(1.0 / x);
    const double lk = gamma_log(k, gamma);
    const double lk1 = gamma_log(k + 1.0, gamma);
    return (k + 1.0) * lk1 - k * lk - k * (k + 1.0) * (lk1 - lk) * x;
}

ChordParams::ChordParams(double a, double b) : alpha(a), beta(b) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::ostringstream os;
        os << "chord parameters need alpha in (0, 1), got " << alpha;
        throw DomainError(os.str());
    }
    if (!(beta > 0.0 && beta <= 1.0)) {
        std::ostringstream os;
        os << "chord parameters need beta in (0, 1], got " << beta;
        throw DomainError(os.str());
    }
}

double chord_generator_f(double x, const ChordParams& params) {
    if (!(x >= 0.0)) {
        std::ostringstream os;
        os << "chord generator needs x >= 0, got " << x;
        throw DomainError(os.str());
    }
    return x / (1.0 - params.slope_parameter() * x);
}

double chord_L(double x, const ChordParams& params) {
    if (!(x >= 0.0)) {
        std::ostringstream os;
        os << "chord needs x >= 0, got " << x;
        throw DomainError(os.str());
    }
    const double l = std::floor(x);
    const double fl = chord_generator_f(l, params);
    const double fl1 = chord_generator_f(l + 1.0, params);
    return fl + (fl1 - fl) * (x - l);
}

}  // namespace ucoh
