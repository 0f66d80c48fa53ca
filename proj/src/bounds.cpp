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

#include "ucoh/bounds.hpp"

#include <cmath>
#include <sstream>

#include "ucoh/error.hpp"
#include "ucoh/scalarfn.hpp"

namespace ucoh {

namespace {

constexpr double brace_floor = 1e-300;

struct Brace {
    double x;
    double value;
    bool clamped;
};

// 1 - (g - 1) L_g(x) with g = 1/a, written as ((a - 1)/a) L_{1/a}(x) + 1.
Brace make_brace(double x, double a) {
    Brace b{x, (a - 1.0) / a * big_L_gamma(x, 1.0 / a) + 1.0, false};
    if (!(b.value >= brace_floor)) {
        b.value = brace_floor;
        b.clamped = true;
    }
    return b;
}

double inner_fraction(const EnsembleShape& sh, double purity_like) {
    return (1.0 - sh.c()) * (sh.d * purity_like - 1.0) / (sh.m * sh.n * sh.s()) + 1.0 / sh.n;
}

double pure_x(const EnsembleShape& sh) { return inner_fraction(sh, 1.0); }

void require_theorem_branch(const CoherenceParams& p) {
    if (p.branch() == Branch::Renyi)
        throw DomainError("beta = 0 has no Theorem-1 branch; use corollary4_renyi_bound");
}

// The chord is only defined on [0, inf). The argument is the item-(2)
// expression at -beta, which can dip below zero for strongly mixed states in
// high dimension; the bound then falls back to chord_L(0) = 0.
double chord_of(double arg, const CoherenceParams& p, bool* clamped = nullptr) {
    if (arg < 0.0) {
        if (clamped != nullptr) *clamped = true;
        arg = 0.0;
    }
    return chord_L(arg, ChordParams(p.alpha(), p.beta()));
}

}  // namespace

EnsembleShape::EnsembleShape(int d_, int n_, int m_) : d(d_), n(n_), m(m_) {
    if (d < 1 || n < d || m < 1) {
        std::ostringstream os;
        os << "invalid ensemble shape (d=" << d << ", N=" << n << ", M=" << m << ")";
        throw ValidationError(os.str());
    }
}

EnsembleShape EnsembleShape::of(const MuetfEnsemble& e) { return {e.dim(), e.count(), e.size()}; }

double lemma2_rhs(const DensityMatrix& rho, const EnsembleShape& shape) {
    if (rho.dim() != shape.d) throw ValidationError("state dimension does not match the ensemble shape");
    return inner_fraction(shape, rho.purity());
}

double x_argument(const DensityMatrix& rho, const EnsembleShape& shape, double a) {
    if (rho.dim() != shape.d) throw ValidationError("state dimension does not match the ensemble shape");
    if (!(a > 0.0 && a < 1.0)) {
        std::ostringstream os;
        os << "exponent " << a << " outside (0, 1)";
        throw DomainError(os.str());
    }
    const double t1 = rho.trace_power(a);
    const double t2 = rho.trace_power(2.0 * a);
    double x = inner_fraction(shape, t2 / (t1 * t1));
    if (!(x > 0.0) || x > 1.0 + 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "internal consistency: L-argument " << x << " left (0, 1]";
        throw InternalError(os.str());
    }
    return std::min(x, 1.0);
}

BoundResult theorem1_bound(const DensityMatrix& rho, const EnsembleShape& shape,
                           const CoherenceParams& params) {
    require_theorem_branch(params);
    const double a = params.alpha();
    const double b = params.beta();
    BoundResult r;
    r.branch = params.branch();

    if (r.branch == Branch::B1) {
        const Brace br = make_brace(x_argument(rho, shape, a), a);
        const double t = rho.trace_power(a);
        r.x = br.x;
        r.brace = br.value;
        r.brace_clamped = br.clamped;
        // (t^b br^(a b) - 1) / ((a - 1) b)
        r.value = std::expm1(b * std::log(t) + a * b * std::log(br.value)) / ((a - 1.0) * b);
        return r;
    }

    // B2 and B3 evaluate the B1 construction at 1 - alpha.
    const Brace br = make_brace(x_argument(rho, shape, 1.0 - a), 1.0 - a);
    const double t = rho.trace_power(1.0 - a);
    r.x = br.x;
    r.brace = br.value;
    r.brace_clamped = br.clamped;
    if (r.branch == Branch::B2) {
        // -(t^b br^((1 - a) b) - 1) / (a b)
        r.value = -std::expm1(b * std::log(t) + (1.0 - a) * b * std::log(br.value)) / (a * b);
        return r;
    }
    // B3: the B2 expression at -beta, passed through the chord.
    r.chord_argument = std::expm1(-b * std::log(t) + (a - 1.0) * b * std::log(br.value)) / (a * b);
    r.value = chord_of(r.chord_argument, params, &r.chord_clamped);
    return r;
}

BoundResult corollary1_mub_bound(const DensityMatrix& rho, int d, int m, const CoherenceParams& params) {
    return theorem1_bound(rho, EnsembleShape(d, d, m), params);
}

BoundResult corollary2_etf_bound(const DensityMatrix& rho, const EnsembleShape& shape,
                                 const CoherenceParams& params) {
    if (shape.m != 1) throw ValidationError("the single-frame bound needs M = 1");
    return theorem1_bound(rho, shape, params);
}

BoundResult corollary3_tsallis_bound(const DensityMatrix& rho, const EnsembleShape& shape, double alpha) {
    return theorem1_bound(rho, shape, CoherenceParams(alpha, 1.0));
}

double corollary4_renyi_bound(const DensityMatrix& rho, const EnsembleShape& shape, double alpha) {
    [[maybe_unused]] const CoherenceParams validated(alpha, 0.0);
    if (alpha >= 0.5) {
        const Brace br = make_brace(x_argument(rho, shape, alpha), alpha);
        return (alpha * std::log(br.value) + std::log(rho.trace_power(alpha))) / (alpha - 1.0);
    }
    const double ca = 1.0 - alpha;
    const Brace br = make_brace(x_argument(rho, shape, ca), ca);
    return -(ca * std::log(br.value) + std::log(rho.trace_power(ca))) / alpha;
}

double PureStateBounds::for_branch(Branch b) const {
    const std::optional<double>* v = nullptr;
    switch (b) {
        case Branch::B1: v = &b1; break;
        case Branch::B2: v = &b2; break;
        case Branch::B3: v = &b3; break;
        case Branch::Renyi: break;
    }
    if (v == nullptr || !v->has_value()) throw DomainError("no pure-state bound for this branch");
    return **v;
}

PureStateBounds pure_state_bounds(const EnsembleShape& shape, const CoherenceParams& params) {
    require_theorem_branch(params);
    const double a = params.alpha();
    const double b = params.beta();
    PureStateBounds out;
    out.x = std::min(pure_x(shape), 1.0);
    if (a >= 0.5) {
        const Brace br = make_brace(out.x, a);
        out.b1 = std::expm1(a * b * std::log(br.value)) / ((a - 1.0) * b);
    } else {
        const Brace br = make_brace(out.x, 1.0 - a);
        out.b2 = -std::expm1((1.0 - a) * b * std::log(br.value)) / (a * b);
        if (b > 0.0) out.b3 = chord_of(std::expm1((a - 1.0) * b * std::log(br.value)) / (a * b), params);
    }
    return out;
}

double lower_bound(const DensityMatrix& rho, const EnsembleShape& shape, const CoherenceParams& params) {
    if (params.branch() == Branch::Renyi) return corollary4_renyi_bound(rho, shape, params.alpha());
    return theorem1_bound(rho, shape, params).value;
}

double averaged_coherence(const MuetfEnsemble& e, const DensityMatrix& rho, const CoherenceParams& params) {
    if (params.branch() == Branch::Renyi) return avg_renyi_coherence(e, rho, params.alpha());
    return avg_coherence(e, rho, params);
}

}  // namespace ucoh
