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

#include "ucoh/harness.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ucoh/error.hpp"
#include "ucoh/scalarfn.hpp"
#include "ucoh/worked_examples.hpp"

namespace ucoh {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_real(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    if (t.empty()) throw ValidationError("empty number in " + context);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
        throw ValidationError("cannot parse \"" + t + "\" as a number in " + context);
    return v;
}

int parse_int(const std::string& text, const std::string& context) {
    const double v = parse_real(text, context);
    if (v != std::floor(v) || v < 1 || v > 1e6)
        throw ValidationError("expected a positive integer in " + context + ", got " + text);
    return static_cast<int>(v);
}

Complex parse_complex(const std::string& raw) {
    const std::string s = trim(raw);
    const std::string ctx = "complex entry \"" + s + "\"";
    if (s.empty()) throw ValidationError("empty " + ctx);
    if (s.back() != 'i') return {parse_real(s, ctx), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not a leading sign or an exponent sign
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    auto imag_of = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t, ctx);
    };
    if (cut == std::string::npos) return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, cut), ctx), imag_of(body.substr(cut))};
}

void require_grid_steps(int steps, const char* what) {
    if (steps < 2) throw ValidationError(std::string(what) + " needs at least 2 grid points");
}

nlohmann::json record_json(const SweepRecord& r) {
    return {{"ensemble", r.ensemble}, {"alpha", r.alpha},       {"beta", r.beta},
            {"coherence", r.coherence}, {"bound", r.bound}, {"state", nlohmann::json::parse(matrix_to_json(r.state))}};
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_value(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string matrix_to_json(const CMatrix& m) {
    std::ostringstream os;
    char buf[64];
    os << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << (i ? ", " : "") << "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", m(i, j).real(), m(i, j).imag());
            os << (j ? ", " : "") << buf;
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

MuetfEnsemble parse_ensemble_spec(const std::string& raw) {
    const std::string spec = trim(raw);
    if (spec == "mub2") return qubit_mub_triple();
    if (spec == "sic2") return single_frame_ensemble(qubit_sic(), "sic2");
    if (spec.rfind("mub-prime-", 0) == 0) return prime_mub_set(parse_int(spec.substr(10), "ensemble " + spec));
    if (spec.rfind("simplex-", 0) == 0) {
        const int d = parse_int(spec.substr(8), "ensemble " + spec);
        return single_frame_ensemble(simplex_etf(d), spec);
    }
    if (spec.rfind("file:", 0) == 0) return load_frames(spec.substr(5));
    throw ValidationError("unknown ensemble \"" + spec +
                          "\" (expected mub2, mub-prime-D, simplex-D, sic2 or file:PATH)");
}

DensityMatrix parse_state_spec(const std::string& raw, int dim, std::uint64_t seed) {
    const std::string spec = trim(raw);
    if (spec == "mixed") return maximally_mixed(dim);
    if (spec == "random") return random_state(dim, seed);
    if (spec.rfind("pseudopure:", 0) == 0) {
        if (dim != 2) throw ValidationError("pseudopure states are qubit states; ensemble has d != 2");
        return pseudopure(parse_real(spec.substr(11), "state " + spec));
    }
    if (spec.rfind("bloch:", 0) == 0) {
        if (dim != 2) throw ValidationError("Bloch states are qubit states; ensemble has d != 2");
        const auto parts = split(spec.substr(6), ',');
        if (parts.size() != 3) throw ValidationError("bloch:R1,R2,R3 needs three components");
        return bloch_qubit(parse_real(parts[0], "state " + spec), parse_real(parts[1], "state " + spec),
                           parse_real(parts[2], "state " + spec));
    }
    if (spec.rfind("pure:", 0) == 0) {
        const auto parts = split(spec.substr(5), ',');
        if (static_cast<int>(parts.size()) != dim) {
            std::ostringstream os;
            os << "pure state has " << parts.size() << " components, ensemble dimension is " << dim;
            throw ValidationError(os.str());
        }
        CVector v(dim);
        for (int k = 0; k < dim; ++k) v(k) = parse_complex(parts[static_cast<std::size_t>(k)]);
        if (!(v.norm() > 0.0)) throw ValidationError("pure state vector is zero");
        return from_pure(v / v.norm());
    }
    throw ValidationError("unknown state \"" + spec +
                          "\" (expected mixed, pure:VEC, pseudopure:V, bloch:R1,R2,R3 or random)");
}

// ---------------------------------------------------------------------------
// Worked-example grids

std::vector<double> ExampleGrid::alphas() const {
    require_grid_steps(alpha_steps, "alpha axis");
    if (!(epsilon >= 1e-4 && epsilon <= 0.5)) throw ValidationError("epsilon must lie in [1e-4, 0.5]");
    std::vector<double> out;
    const double cap = 1.0 - epsilon;
    for (int i = 0; i < alpha_steps; ++i) out.push_back(std::min(0.5 + 0.5 * i / (alpha_steps - 1), cap));
    return out;
}

namespace {

template <class Pipeline, class Closed>
ExampleSummary run_example(const ExampleGrid& grid, const char* xname, double xmax, Pipeline pipeline,
                           Closed closed, std::ostream& csv) {
    require_grid_steps(grid.x_steps, "state axis");
    const auto alphas = grid.alphas();
    csv << "alpha," << xname << ",lhs_closed,lhs_pipeline,bound_closed,bound_pipeline,gap\n";
    ExampleSummary sum;
    sum.max_gap = -std::numeric_limits<double>::infinity();
    sum.min_gap = std::numeric_limits<double>::infinity();
    for (double a : alphas) {
        for (int i = 0; i < grid.x_steps; ++i) {
            const double x = i == grid.x_steps - 1 ? xmax : xmax * i / (grid.x_steps - 1);
            const auto [lhs_p, bnd_p] = pipeline(a, x);
            const auto [lhs_c, bnd_c] = closed(a, x);
            const double gap = lhs_p - bnd_p;
            csv << format_value(a) << ',' << format_value(x) << ',' << format_value(lhs_c) << ','
                << format_value(lhs_p) << ',' << format_value(bnd_c) << ',' << format_value(bnd_p) << ','
                << format_value(gap) << '\n';
            ++sum.rows;
            sum.max_gap = std::max(sum.max_gap, gap);
            const double dev = std::max(std::abs(lhs_c - lhs_p), std::abs(bnd_c - bnd_p));
            std::ostringstream cell;
            cell.precision(17);
            cell << "alpha=" << a << ", " << xname << "=" << x;
            if (!(dev <= sum.max_closed_deviation)) {
                sum.max_closed_deviation = dev;
                sum.closed_deviation_cell = cell.str();
            }
            if (gap < sum.min_gap) {
                sum.min_gap = gap;
                sum.min_gap_cell = cell.str();
            }
        }
    }
    csv.flush();
    return sum;
}

}  // namespace

void require_passed(const ExampleSummary& s) {
    if (!(s.max_closed_deviation <= tol::closed_form)) {
        std::ostringstream os;
        os.precision(3);
        os << "closed-form transcription disagrees with the pipeline by " << s.max_closed_deviation << " at "
           << s.closed_deviation_cell << " (pipeline is authoritative)";
        throw DiscrepancyError(os.str());
    }
    if (s.min_gap < -tol::gap) {
        std::ostringstream os;
        os.precision(17);
        os << "averaged coherence falls below the bound by " << -s.min_gap << " at " << s.min_gap_cell;
        throw ViolationError(os.str());
    }
}

ExampleSummary run_example1(const ExampleGrid& grid, std::ostream& csv) {
    const MuetfEnsemble mubs = qubit_mub_triple();
    const EnsembleShape shape = EnsembleShape::of(mubs);
    auto pipeline = [&](double a, double v) {
        const DensityMatrix rho = pseudopure(v);
        const CoherenceParams p(a, a);
        return std::pair{avg_coherence(mubs, rho, p), corollary1_mub_bound(rho, shape.d, shape.m, p).value};
    };
    auto closed = [](double a, double v) {
        return std::pair{worked::example1_coherence(a, v), worked::example1_bound(a, v)};
    };
    return run_example(grid, "v", 1.0, pipeline, closed, csv);
}

ExampleSummary run_example2(const ExampleGrid& grid, std::ostream& csv) {
    const MuetfEnsemble sic = single_frame_ensemble(qubit_sic(), "sic2");
    const EnsembleShape shape = EnsembleShape::of(sic);
    auto pipeline = [&](double a, double r1) {
        const DensityMatrix rho = bloch_qubit(r1, 0.0, r1);
        const CoherenceParams p(a, -a);
        return std::pair{ureoc_frame(rho, sic.member(0), p), corollary2_etf_bound(rho, shape, p).value};
    };
    auto closed = [](double a, double r1) {
        return std::pair{worked::example2_coherence(a, r1), worked::example2_bound(a, r1)};
    };
    return run_example(grid, "r1", 1.0 / std::numbers::sqrt2, pipeline, closed, csv);
}

// ---------------------------------------------------------------------------
// Scan

std::vector<double> GridAxis::points() const {
    if (name != "alpha" && name != "beta" && name != "v" && name != "r1")
        throw ValidationError("unknown axis \"" + name + "\" (expected alpha, beta, v or r1)");
    require_grid_steps(steps, ("axis " + name).c_str());
    if (!(start < stop)) throw ValidationError("axis " + name + " needs start < stop");
    std::vector<double> out;
    for (int i = 0; i < steps; ++i)
        out.push_back(i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1));
    return out;
}

ScanSummary run_scan(const ScanSpec& spec, std::ostream& csv) {
    const MuetfEnsemble ens = parse_ensemble_spec(spec.ensemble);
    ens.require_certified();
    const EnsembleShape shape = EnsembleShape::of(ens);

    std::vector<std::vector<double>> pts;
    bool has_alpha = false, has_beta = false, has_v = false, has_r1 = false;
    for (const auto& ax : spec.axes) {
        bool& seen = ax.name == "alpha" ? has_alpha : ax.name == "beta" ? has_beta : ax.name == "v" ? has_v : has_r1;
        pts.push_back(ax.points());
        if (seen) throw ValidationError("axis " + ax.name + " given twice");
        seen = true;
    }
    if (has_v && has_r1) throw ValidationError("v and r1 axes select different state families");
    if ((has_v || has_r1) && shape.d != 2) throw ValidationError("v and r1 axes need a qubit ensemble");

    std::optional<DensityMatrix> fixed_state;
    if (!has_v && !has_r1) fixed_state = parse_state_spec(spec.state, shape.d, spec.seed);

    for (const auto& ax : spec.axes) csv << ax.name << ',';
    if (!has_alpha) csv << "alpha,";
    if (!has_beta) csv << "beta,";
    csv << "branch,avg_coherence,bound,gap\n";

    ScanSummary sum;
    sum.min_gap = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx(spec.axes.size(), 0);
    bool done = false;
    while (!done) {
        double alpha = spec.alpha, beta = spec.beta;
        std::optional<DensityMatrix> rho = fixed_state;
        for (std::size_t k = 0; k < spec.axes.size(); ++k) {
            const double x = pts[k][idx[k]];
            const std::string& n = spec.axes[k].name;
            if (n == "alpha") alpha = x;
            else if (n == "beta") beta = x;
            else if (n == "v") rho.emplace(pseudopure(x));
            else rho.emplace(bloch_qubit(x, 0.0, x));
        }
        const CoherenceParams params(alpha, beta);
        const double coh = averaged_coherence(ens, *rho, params);
        const double bnd = lower_bound(*rho, shape, params);
        const double gap = coh - bnd;
        for (std::size_t k = 0; k < spec.axes.size(); ++k) csv << format_value(pts[k][idx[k]]) << ',';
        if (!has_alpha) csv << format_value(alpha) << ',';
        if (!has_beta) csv << format_value(beta) << ',';
        csv << to_string(params.branch()) << ',' << format_value(coh) << ',' << format_value(bnd) << ','
            << format_value(gap) << '\n';
        ++sum.rows;
        sum.min_gap = std::min(sum.min_gap, gap);
        if (gap < -tol::gap) ++sum.violations;

        // odometer over the axes, last axis fastest
        done = true;
        for (std::size_t k = spec.axes.size(); k-- > 0;) {
            if (++idx[k] < pts[k].size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
    }
    csv.flush();
    return sum;
}

void require_passed(const ScanSummary& s) {
    if (s.violations > 0) {
        std::ostringstream os;
        os.precision(17);
        os << s.violations << " grid point(s) with averaged coherence below the bound; min gap " << s.min_gap;
        throw ViolationError(os.str());
    }
}

// ---------------------------------------------------------------------------
// Randomized sweep

std::vector<CoherenceParams> sweep_grid(Branch b) {
    std::vector<CoherenceParams> out;
    auto add = [&](std::initializer_list<double> as, std::initializer_list<double> bs) {
        for (double a : as)
            for (double be : bs) out.emplace_back(a, be);
    };
    switch (b) {
        case Branch::B1: add({0.5, 0.7, 0.9}, {-3.0, -1.0, -0.2, 0.3, 1.0}); break;
        case Branch::B2: add({0.1, 0.3, 0.45}, {-3.0, -0.5}); break;
        case Branch::B3: add({0.1, 0.3, 0.45}, {0.3, 1.0}); break;
        case Branch::Renyi: add({0.1, 0.3, 0.45, 0.5, 0.7, 0.9}, {0.0}); break;
    }
    return out;
}

std::string RandomTestReport::to_text() const {
    std::ostringstream os;
    os.precision(12);
    os << "states checked:        " << states << "\n"
       << "evaluations:           " << evaluations << "\n"
       << "min gap:               " << min_gap << "\n"
       << "min bound:             " << min_bound << "\n"
       << "max IoC excess:        " << max_lemma2_excess << "\n"
       << "clamped braces:        " << clamped_braces << "\n"
       << "violations:            " << violations << "\n"
       << "negative bounds:       " << negative_bounds << "\n"
       << "IoC violations:        " << lemma2_violations << "\n";
    if (argmin) os << "argmin: " << record_json(*argmin).dump() << "\n";
    for (const auto& f : failures) os << "violation: " << record_json(f).dump() << "\n";
    os << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

RandomTestReport run_random_test(const RandomTestSpec& spec) {
    if (spec.samples < 1) throw ValidationError("random-test needs at least one sample");
    if (spec.ensembles.empty()) throw ValidationError("random-test needs at least one ensemble");
    if (spec.branches.empty()) throw ValidationError("random-test needs at least one branch");

    std::vector<CoherenceParams> grid;
    for (Branch b : spec.branches) {
        auto g = sweep_grid(b);
        grid.insert(grid.end(), g.begin(), g.end());
    }

    RandomTestReport rep;
    rep.min_gap = std::numeric_limits<double>::infinity();
    rep.min_bound = std::numeric_limits<double>::infinity();
    rep.max_lemma2_excess = -std::numeric_limits<double>::infinity();
    constexpr std::size_t max_failures = 5;

    for (const auto& name : spec.ensembles) {
        const MuetfEnsemble ens = parse_ensemble_spec(name);
        ens.require_certified();
        const EnsembleShape shape = EnsembleShape::of(ens);
        const int d = shape.d;
        const std::size_t pure_count = std::max<std::size_t>(1, spec.samples / 10);

        for (std::size_t i = 0; i < spec.samples + pure_count + 1; ++i) {
            const DensityMatrix rho =
                i < spec.samples ? random_state(d, derive_seed(spec.seed, i))
                : i < spec.samples + pure_count
                    ? random_pure_state(d, derive_seed(~spec.seed, i))
                    : from_pure(CVector::Unit(d, 0));
            ++rep.states;

            double ioc = 0.0;
            for (const Frame& f : ens.members()) ioc += index_of_coincidence(outcome_probabilities(f, rho));
            const double excess = ioc / ens.size() - lemma2_rhs(rho, shape);
            rep.max_lemma2_excess = std::max(rep.max_lemma2_excess, excess);
            if (excess > tol::lemma2) ++rep.lemma2_violations;

            for (const CoherenceParams& p : grid) {
                const double coh = averaged_coherence(ens, rho, p);
                double bnd = 0.0;
                if (p.branch() == Branch::Renyi) {
                    bnd = corollary4_renyi_bound(rho, shape, p.alpha());
                } else {
                    const BoundResult br = theorem1_bound(rho, shape, p);
                    bnd = br.value;
                    if (br.brace_clamped) ++rep.clamped_braces;
                }
                ++rep.evaluations;
                const double gap = coh - bnd;
                SweepRecord rec{ens.label(), p.alpha(), p.beta(), coh, bnd, {}};
                if (gap < rep.min_gap) {
                    rep.min_gap = gap;
                    rec.state = rho.matrix();
                    rep.argmin = rec;
                }
                rep.min_bound = std::min(rep.min_bound, bnd);
                const bool bad_gap = gap < -tol::gap;
                const bool bad_sign = bnd < -tol::nonnegative;
                if (bad_gap) ++rep.violations;
                if (bad_sign) ++rep.negative_bounds;
                if ((bad_gap || bad_sign) && rep.failures.size() < max_failures) {
                    rec.state = rho.matrix();
                    rep.failures.push_back(rec);
                }
            }
        }
    }
    return rep;
}

void write_run_record(const std::string& path, const std::string& command, const std::string& params_json,
                      const std::string& summary_json) {
    nlohmann::ordered_json rec;
    rec["command"] = command;
    rec["version"] = version_string;
    try {
        rec["parameters"] = nlohmann::ordered_json::parse(params_json);
        rec["summary"] = nlohmann::ordered_json::parse(summary_json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("run record: ") + e.what());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << rec.dump(2) << '\n';
    if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace ucoh
