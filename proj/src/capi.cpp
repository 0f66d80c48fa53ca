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

#include "ucoh/ucoh.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "ucoh/error.hpp"
#include "ucoh/harness.hpp"

struct ucoh_state {
    ucoh::DensityMatrix rho;
};

struct ucoh_ensemble {
    ucoh::MuetfEnsemble ens;
};

namespace {

thread_local std::string last_error;

ucoh_status fail(ucoh_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

ucoh_status null_arg(const char* what) { return fail(UCOH_ERR_NULL_ARGUMENT, std::string(what) + " is NULL"); }

// Runs fn, translating exceptions into status codes.
template <class Fn>
ucoh_status guarded(Fn&& fn) noexcept {
    try {
        last_error.clear();
        return fn();
    } catch (const ucoh::Error& e) {
        return fail(static_cast<ucoh_status>(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(UCOH_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(UCOH_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(UCOH_ERR_INTERNAL, "unknown exception");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bool to_stdout(const char* path) { return path == nullptr || std::strcmp(path, "-") == 0; }

// Opens the CSV target; the runner is called with the stream.
template <class Run>
auto with_output(const char* path, Run&& run) {
    if (to_stdout(path)) return run(std::cout);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ucoh::IoError(std::string("cannot open ") + path + " for writing");
    struct Closer {
        std::ofstream& f;
        const char* p;
        ~Closer() noexcept(false) {
            f.close();
            if (!f && std::uncaught_exceptions() == 0) throw ucoh::IoError(std::string("write to ") + p + " failed");
        }
    } closer{out, path};
    return run(out);
}

ucoh::Branch to_branch(ucoh_branch b) {
    switch (b) {
        case UCOH_BRANCH_B1: return ucoh::Branch::B1;
        case UCOH_BRANCH_B2: return ucoh::Branch::B2;
        case UCOH_BRANCH_B3: return ucoh::Branch::B3;
        case UCOH_BRANCH_RENYI: return ucoh::Branch::Renyi;
    }
    throw ucoh::ValidationError("unknown branch code " + std::to_string(static_cast<int>(b)));
}

}  // namespace

extern "C" {

const char* ucoh_version(void) { return ucoh::version_string; }

const char* ucoh_last_error(void) { return last_error.c_str(); }

const char* ucoh_status_name(ucoh_status status) {
    switch (status) {
        case UCOH_OK: return "ok";
        case UCOH_ERR_VALIDATION: return "validation error";
        case UCOH_ERR_DOMAIN: return "domain error";
        case UCOH_ERR_NOT_A_STATE: return "not a state";
        case UCOH_ERR_SUPPORT: return "support error";
        case UCOH_ERR_SCHEMA: return "schema error";
        case UCOH_ERR_IO: return "I/O error";
        case UCOH_ERR_UNCERTIFIED: return "uncertified ensemble";
        case UCOH_ERR_VIOLATION: return "inequality violation";
        case UCOH_ERR_DISCREPANCY: return "closed-form discrepancy";
        case UCOH_ERR_INTERNAL: return "internal error";
        case UCOH_ERR_NULL_ARGUMENT: return "null argument";
    }
    return "unknown status";
}

int ucoh_exit_code(ucoh_status status) {
    switch (status) {
        case UCOH_OK: return 0;
        case UCOH_ERR_VIOLATION:
        case UCOH_ERR_DISCREPANCY: return 2;
        case UCOH_ERR_IO: return 3;
        default: return 1;
    }
}

void ucoh_string_free(char* s) { std::free(s); }

ucoh_status ucoh_format_value(double x, char* buf, size_t len) {
    if (buf == nullptr) return null_arg("buf");
    return guarded([&] {
        const std::string s = ucoh::format_value(x);
        if (s.size() + 1 > len) return fail(UCOH_ERR_VALIDATION, "buffer too small");
        std::memcpy(buf, s.c_str(), s.size() + 1);
        return UCOH_OK;
    });
}

ucoh_status ucoh_ensemble_from_spec(const char* spec, ucoh_ensemble** out) {
    if (spec == nullptr) return null_arg("spec");
    if (out == nullptr) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        *out = new ucoh_ensemble{ucoh::parse_ensemble_spec(spec)};
        return UCOH_OK;
    });
}

void ucoh_ensemble_free(ucoh_ensemble* e) { delete e; }

ucoh_status ucoh_ensemble_shape(const ucoh_ensemble* e, int* dim, int* count, int* members) {
    if (e == nullptr) return null_arg("ensemble");
    if (dim) *dim = e->ens.dim();
    if (count) *count = e->ens.count();
    if (members) *members = e->ens.size();
    return UCOH_OK;
}

ucoh_status ucoh_ensemble_verify(const ucoh_ensemble* e, int* passed, char** report) {
    if (e == nullptr) return null_arg("ensemble");
    return guarded([&] {
        const ucoh::CertificationReport r =
            e->ens.certification() ? *e->ens.certification() : ucoh::verify_muetf(e->ens);
        if (passed) *passed = r.passed() ? 1 : 0;
        if (report) *report = dup_string(r.to_text());
        return UCOH_OK;
    });
}

ucoh_status ucoh_ensemble_save(const ucoh_ensemble* e, const char* path) {
    if (e == nullptr) return null_arg("ensemble");
    if (path == nullptr) return null_arg("path");
    return guarded([&] {
        ucoh::save_frames(e->ens, path);
        return UCOH_OK;
    });
}

ucoh_status ucoh_state_from_spec(const char* spec, int dim, uint64_t seed, ucoh_state** out) {
    if (spec == nullptr) return null_arg("spec");
    if (out == nullptr) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        *out = new ucoh_state{ucoh::parse_state_spec(spec, dim, seed)};
        return UCOH_OK;
    });
}

ucoh_status ucoh_state_from_matrix(int dim, const double* re, const double* im, ucoh_state** out) {
    if (re == nullptr) return null_arg("re");
    if (out == nullptr) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        if (dim < 1 || dim > ucoh::max_dimension) throw ucoh::ValidationError("dimension out of range");
        ucoh::CMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const std::size_t k = static_cast<std::size_t>(i) * dim + j;
                m(i, j) = {re[k], im ? im[k] : 0.0};
            }
        *out = new ucoh_state{ucoh::DensityMatrix(m)};
        return UCOH_OK;
    });
}

void ucoh_state_free(ucoh_state* s) { delete s; }

int ucoh_state_dim(const ucoh_state* s) { return s ? s->rho.dim() : 0; }

ucoh_status ucoh_branch_of(double alpha, double beta, ucoh_branch* out) {
    if (out == nullptr) return null_arg("out");
    return guarded([&] {
        switch (ucoh::CoherenceParams(alpha, beta).branch()) {
            case ucoh::Branch::B1: *out = UCOH_BRANCH_B1; break;
            case ucoh::Branch::B2: *out = UCOH_BRANCH_B2; break;
            case ucoh::Branch::B3: *out = UCOH_BRANCH_B3; break;
            case ucoh::Branch::Renyi: *out = UCOH_BRANCH_RENYI; break;
        }
        return UCOH_OK;
    });
}

ucoh_status ucoh_avg_coherence(const ucoh_ensemble* e, const ucoh_state* s, double alpha, double beta,
                               double* out) {
    if (e == nullptr) return null_arg("ensemble");
    if (s == nullptr) return null_arg("state");
    if (out == nullptr) return null_arg("out");
    return guarded([&] {
        *out = ucoh::averaged_coherence(e->ens, s->rho, ucoh::CoherenceParams(alpha, beta));
        return UCOH_OK;
    });
}

ucoh_status ucoh_lower_bound(const ucoh_ensemble* e, const ucoh_state* s, double alpha, double beta,
                             double* out) {
    if (e == nullptr) return null_arg("ensemble");
    if (s == nullptr) return null_arg("state");
    if (out == nullptr) return null_arg("out");
    return guarded([&] {
        e->ens.require_certified();
        *out = ucoh::lower_bound(s->rho, ucoh::EnsembleShape::of(e->ens), ucoh::CoherenceParams(alpha, beta));
        return UCOH_OK;
    });
}

void ucoh_example_grid_default(ucoh_example_grid* grid) {
    if (grid == nullptr) return;
    const ucoh::ExampleGrid g;
    *grid = {g.alpha_steps, g.epsilon, g.x_steps};
}

ucoh_status ucoh_run_example(int which, const ucoh_example_grid* grid, const char* out_path,
                             ucoh_example_summary* summary) {
    if (grid == nullptr) return null_arg("grid");
    return guarded([&] {
        if (which != 1 && which != 2) throw ucoh::ValidationError("example must be 1 or 2");
        const ucoh::ExampleGrid g{grid->alpha_steps, grid->epsilon, grid->x_steps};
        const ucoh::ExampleSummary s = with_output(out_path, [&](std::ostream& os) {
            return which == 1 ? ucoh::run_example1(g, os) : ucoh::run_example2(g, os);
        });
        if (summary) *summary = {s.rows, s.max_gap, s.min_gap, s.max_closed_deviation};
        ucoh::require_passed(s);
        return UCOH_OK;
    });
}

ucoh_status ucoh_run_scan(const ucoh_scan_spec* spec, const char* out_path, ucoh_scan_summary* summary) {
    if (spec == nullptr) return null_arg("spec");
    if (spec->axis_count > 0 && spec->axes == nullptr) return null_arg("spec->axes");
    return guarded([&] {
        ucoh::ScanSpec s;
        for (size_t k = 0; k < spec->axis_count; ++k) {
            const ucoh_axis& a = spec->axes[k];
            if (a.name == nullptr) throw ucoh::ValidationError("axis name is NULL");
            s.axes.push_back({a.name, a.start, a.stop, a.steps});
        }
        s.alpha = spec->alpha;
        s.beta = spec->beta;
        if (spec->state) s.state = spec->state;
        if (spec->ensemble) s.ensemble = spec->ensemble;
        s.seed = spec->seed;
        const ucoh::ScanSummary r = with_output(out_path, [&](std::ostream& os) { return ucoh::run_scan(s, os); });
        if (summary) *summary = {r.rows, r.min_gap, r.violations};
        ucoh::require_passed(r);
        return UCOH_OK;
    });
}

ucoh_status ucoh_run_random_test(const ucoh_random_spec* spec, ucoh_random_summary* summary, char** report) {
    if (spec == nullptr) return null_arg("spec");
    return guarded([&] {
        ucoh::RandomTestSpec s;
        if (spec->ensemble_count > 0) {
            if (spec->ensembles == nullptr) throw ucoh::ValidationError("ensemble list is NULL");
            s.ensembles.assign(spec->ensembles, spec->ensembles + spec->ensemble_count);
        }
        if (spec->branch_count > 0) {
            if (spec->branches == nullptr) throw ucoh::ValidationError("branch list is NULL");
            s.branches.clear();
            for (size_t k = 0; k < spec->branch_count; ++k) s.branches.push_back(to_branch(spec->branches[k]));
        }
        s.samples = spec->samples;
        s.seed = spec->seed;
        const ucoh::RandomTestReport r = ucoh::run_random_test(s);
        if (summary)
            *summary = {r.states,  r.evaluations, r.violations,        r.negative_bounds,
                        r.lemma2_violations, r.clamped_braces, r.min_gap, r.min_bound,
                        r.max_lemma2_excess, r.passed() ? 1 : 0};
        if (report) *report = dup_string(r.to_text());
        if (!r.passed()) return fail(UCOH_ERR_VIOLATION, "random test found violations");
        return UCOH_OK;
    });
}

ucoh_status ucoh_write_run_record(const char* path, const char* command, const char* params_json,
                                  const char* summary_json) {
    if (path == nullptr) return null_arg("path");
    if (command == nullptr) return null_arg("command");
    return guarded([&] {
        ucoh::write_run_record(path, command, params_json ? params_json : "{}",
                               summary_json ? summary_json : "{}");
        return UCOH_OK;
    });
}

}  // extern "C"
