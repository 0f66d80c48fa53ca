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

// ucoh: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ucoh/ucoh.h"

namespace {

using json = nlohmann::ordered_json;

struct EnsembleDeleter {
    void operator()(ucoh_ensemble* e) const { ucoh_ensemble_free(e); }
};
struct StateDeleter {
    void operator()(ucoh_state* s) const { ucoh_state_free(s); }
};
struct StringDeleter {
    void operator()(char* s) const { ucoh_string_free(s); }
};
using EnsemblePtr = std::unique_ptr<ucoh_ensemble, EnsembleDeleter>;
using StatePtr = std::unique_ptr<ucoh_state, StateDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a status after the message has been reported.
struct Exit {
    int code;
};

void check(ucoh_status s, const std::string& message) {
    if (s == UCOH_OK) return;
    std::cerr << "ucoh: " << ucoh_status_name(s) << ": " << message << "\n";
    throw Exit{ucoh_exit_code(s)};
}

void check(ucoh_status s) {
    if (s != UCOH_OK) check(s, ucoh_last_error());
}

std::string fmt(double x) {
    char buf[32];
    check(ucoh_format_value(x, buf, sizeof buf));
    return buf;
}

bool writes_file(const std::string& out) { return !out.empty() && out != "-"; }

void record(const std::string& out, const char* command, const json& params, const json& summary) {
    if (!writes_file(out)) return;
    check(ucoh_write_run_record((out + ".run.json").c_str(), command, params.dump().c_str(), summary.dump().c_str()));
}

EnsemblePtr load_ensemble(const std::string& spec) {
    ucoh_ensemble* e = nullptr;
    check(ucoh_ensemble_from_spec(spec.c_str(), &e));
    return EnsemblePtr(e);
}

int ensemble_dim(const ucoh_ensemble* e) {
    int d = 0;
    check(ucoh_ensemble_shape(e, &d, nullptr, nullptr));
    return d;
}

StatePtr load_state(const std::string& spec, int dim, std::uint64_t seed) {
    ucoh_state* s = nullptr;
    check(ucoh_state_from_spec(spec.c_str(), dim, seed, &s));
    return StatePtr(s);
}

// NAME:START:STOP:STEPS
ucoh_axis parse_axis(const std::string& text, std::vector<std::string>& names) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 4) throw CLI::ValidationError("--axis", "expected NAME:START:STOP:STEPS, got " + text);
    try {
        std::size_t used = 0;
        const double start = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        const double stop = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        const int steps = std::stoi(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
        names.push_back(parts[0]);
        return {nullptr, start, stop, steps};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--axis", "cannot parse numbers in " + text);
    }
}

ucoh_branch parse_branch(const std::string& s) {
    if (s == "B1" || s == "b1") return UCOH_BRANCH_B1;
    if (s == "B2" || s == "b2") return UCOH_BRANCH_B2;
    if (s == "B3" || s == "b3") return UCOH_BRANCH_B3;
    if (s == "renyi" || s == "RENYI" || s == "Renyi") return UCOH_BRANCH_RENYI;
    throw CLI::ValidationError("--branch", "expected B1, B2, B3, renyi or all, got " + s);
}

const char* branch_name(ucoh_branch b) {
    switch (b) {
        case UCOH_BRANCH_B1: return "B1";
        case UCOH_BRANCH_B2: return "B2";
        case UCOH_BRANCH_B3: return "B3";
        case UCOH_BRANCH_RENYI: return "RENYI";
    }
    return "?";
}

struct Options {
    std::string out;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    double alpha = 0.5;
    double beta = 1.0;
    std::string ensemble = "mub2";
    std::vector<std::string> ensembles;
    std::string state = "mixed";
    ucoh_example_grid grid{};
    std::vector<std::string> axes;
    std::vector<std::string> branches;
    std::string target;
    std::string save;
};

int run_example(int which, const Options& o) {
    ucoh_example_summary s{};
    const ucoh_status st = ucoh_run_example(which, &o.grid, writes_file(o.out) ? o.out.c_str() : nullptr, &s);
    const std::string err = ucoh_last_error();
    const bool ran = st == UCOH_OK || st == UCOH_ERR_VIOLATION || st == UCOH_ERR_DISCREPANCY;
    if (ran) {
        std::cerr << "rows " << s.rows << ", max gap " << fmt(s.max_gap) << ", min gap " << fmt(s.min_gap)
                  << ", max closed-form deviation " << fmt(s.max_closed_deviation) << "\n";
    }
    const json params{{"alpha_steps", o.grid.alpha_steps}, {"epsilon", o.grid.epsilon}, {"x_steps", o.grid.x_steps}};
    json summary{{"status", ucoh_status_name(st)}};
    if (ran) {
        summary.update({{"rows", s.rows},
                        {"max_gap", s.max_gap},
                        {"min_gap", s.min_gap},
                        {"max_closed_deviation", s.max_closed_deviation}});
        record(o.out, which == 1 ? "example1" : "example2", params, summary);
    }
    check(st, err);
    return 0;
}

int run_scan(const Options& o) {
    std::vector<std::string> names;
    std::vector<ucoh_axis> axes;
    for (const auto& a : o.axes) axes.push_back(parse_axis(a, names));
    for (std::size_t k = 0; k < axes.size(); ++k) axes[k].name = names[k].c_str();
    const ucoh_scan_spec spec{axes.data(), axes.size(), o.alpha,        o.beta,
                              o.state.c_str(), o.ensemble.c_str(), o.seed};
    ucoh_scan_summary s{};
    const ucoh_status st = ucoh_run_scan(&spec, writes_file(o.out) ? o.out.c_str() : nullptr, &s);
    const std::string err = ucoh_last_error();
    json params{{"axes", o.axes}, {"alpha", o.alpha}, {"beta", o.beta},
                {"state", o.state}, {"ensemble", o.ensemble}, {"seed", o.seed}};
    json summary{{"status", ucoh_status_name(st)}};
    if (st == UCOH_OK || st == UCOH_ERR_VIOLATION) {
        std::cerr << "rows " << s.rows << ", min gap " << fmt(s.min_gap) << ", violations " << s.violations << "\n";
        summary.update({{"rows", s.rows}, {"min_gap", s.min_gap}, {"violations", s.violations}});
        record(o.out, "scan", params, summary);
    }
    check(st, err);
    return 0;
}

int run_verify(const Options& o) {
    std::string spec = o.target;
    if (spec == "qubit-sic") spec = "sic2";
    if (spec == "qubit-mub") spec = "mub2";
    const bool builtin = spec == "mub2" || spec == "sic2" || spec.rfind("mub-prime-", 0) == 0 ||
                         spec.rfind("simplex-", 0) == 0 || spec.rfind("file:", 0) == 0;
    if (!builtin) spec = "file:" + spec;
    const EnsemblePtr e = load_ensemble(spec);
    int passed = 0;
    char* raw = nullptr;
    check(ucoh_ensemble_verify(e.get(), &passed, &raw));
    const StringPtr report(raw);
    std::cout << report.get();
    if (!o.save.empty()) check(ucoh_ensemble_save(e.get(), o.save.c_str()));
    if (!passed) {
        std::cerr << "ucoh: certification failed\n";
        return 1;
    }
    return 0;
}

int run_random(const Options& o) {
    if (o.samples < 1) {
        std::cerr << "ucoh: usage: --samples must be at least 1\n";
        return 1;
    }
    std::vector<ucoh_branch> branches;
    for (const auto& b : o.branches) {
        if (b == "all") {
            branches.insert(branches.end(), {UCOH_BRANCH_B1, UCOH_BRANCH_B2, UCOH_BRANCH_B3});
        } else {
            branches.push_back(parse_branch(b));
        }
    }
    if (branches.empty()) branches = {UCOH_BRANCH_B1, UCOH_BRANCH_B2, UCOH_BRANCH_B3};
    std::vector<std::string> names = o.ensembles.empty() ? std::vector<std::string>{"mub2"} : o.ensembles;
    std::vector<const char*> cnames;
    for (const auto& n : names) cnames.push_back(n.c_str());
    const ucoh_random_spec spec{cnames.data(), cnames.size(), branches.data(), branches.size(), o.samples, o.seed};
    ucoh_random_summary s{};
    char* raw = nullptr;
    const ucoh_status st = ucoh_run_random_test(&spec, &s, &raw);
    const std::string err = ucoh_last_error();
    const StringPtr report(raw);
    if (report) {
        if (writes_file(o.out)) {
            std::FILE* f = std::fopen(o.out.c_str(), "wb");
            if (f == nullptr) {
                std::cerr << "ucoh: I/O error: cannot open " << o.out << "\n";
                return 3;
            }
            std::fputs(report.get(), f);
            if (std::fclose(f) != 0) {
                std::cerr << "ucoh: I/O error: write to " << o.out << " failed\n";
                return 3;
            }
        }
        std::cout << report.get();
    }
    std::vector<std::string> bnames;
    for (ucoh_branch b : branches) bnames.emplace_back(branch_name(b));
    json params{{"ensembles", names}, {"branches", bnames}, {"samples", o.samples}, {"seed", o.seed}};
    json summary{{"status", ucoh_status_name(st)}};
    if (report)
        summary.update({{"states", s.states},
                        {"evaluations", s.evaluations},
                        {"violations", s.violations},
                        {"negative_bounds", s.negative_bounds},
                        {"lemma2_violations", s.lemma2_violations},
                        {"min_gap", s.min_gap},
                        {"min_bound", s.min_bound},
                        {"max_lemma2_excess", s.max_lemma2_excess}});
    if (report) record(o.out, "random-test", params, summary);
    check(st, err);
    return 0;
}

int run_query(bool bound, const Options& o) {
    const EnsemblePtr e = load_ensemble(o.ensemble);
    const StatePtr s = load_state(o.state, ensemble_dim(e.get()), o.seed);
    double v = 0.0;
    check(bound ? ucoh_lower_bound(e.get(), s.get(), o.alpha, o.beta, &v)
                : ucoh_avg_coherence(e.get(), s.get(), o.alpha, o.beta, &v));
    std::cout << fmt(v) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unified (alpha, beta)-relative entropy coherence: values, bounds and checks"};
    app.set_version_flag("--version", ucoh_version());
    app.require_subcommand(1);

    Options o;
    ucoh_example_grid_default(&o.grid);

    auto add_out = [&](CLI::App* c, const char* what) { c->add_option("--out", o.out, what); };
    auto add_grid = [&](CLI::App* c) {
        c->add_option("--alpha-steps", o.grid.alpha_steps, "points on the alpha axis")->check(CLI::Range(2, 100000));
        c->add_option("--x-steps", o.grid.x_steps, "points on the state axis")->check(CLI::Range(2, 100000));
        c->add_option("--epsilon", o.grid.epsilon, "alpha is capped at 1 - epsilon")
            ->check(CLI::Range(1e-4, 0.5));
    };
    auto add_params = [&](CLI::App* c) {
        c->add_option("--alpha", o.alpha, "alpha in (0, 1)");
        c->add_option("--beta", o.beta, "beta <= 1 (0 selects the Renyi form)");
    };
    auto add_specs = [&](CLI::App* c) {
        c->add_option("--ensemble", o.ensemble, "mub2 | mub-prime-D | simplex-D | sic2 | file:PATH");
        c->add_option("--state", o.state, "mixed | pure:VEC | pseudopure:V | bloch:R1,R2,R3 | random");
        c->add_option("--seed", o.seed, "seed for random states");
    };

    auto* ex1 = app.add_subcommand("example1", "pseudopure qubit over the MUB triple, beta = alpha");
    add_out(ex1, "CSV output (default stdout)");
    add_grid(ex1);
    auto* ex2 = app.add_subcommand("example2", "Bloch (r1, 0, r1) over the qubit SIC, beta = -alpha");
    add_out(ex2, "CSV output (default stdout)");
    add_grid(ex2);

    auto* scan = app.add_subcommand("scan", "grid sweep of averaged coherence and bound");
    add_out(scan, "CSV output (default stdout)");
    add_params(scan);
    add_specs(scan);
    scan->add_option("--axis", o.axes, "NAME:START:STOP:STEPS with NAME in alpha, beta, v, r1");

    auto* verify = app.add_subcommand("verify", "certify a frame file or built-in ensemble");
    verify->add_option("target", o.target, "mub2 | qubit-sic | sic2 | mub-prime-D | simplex-D | PATH")->required();
    verify->add_option("--save", o.save, "also write the frames as JSON");

    auto* rnd = app.add_subcommand("random-test", "randomized check of the lower bound and the averaged-IoC bound");
    add_out(rnd, "also write the report here");
    rnd->add_option("--ensemble", o.ensembles, "ensemble spec (repeatable; default mub2)");
    rnd->add_option("--branch", o.branches, "B1 | B2 | B3 | renyi | all (repeatable; default B1 B2 B3)");
    rnd->add_option("--samples", o.samples, "Ginibre states per ensemble");
    rnd->add_option("--seed", o.seed, "base seed");

    auto* coh = app.add_subcommand("coherence", "averaged coherence of a state");
    add_params(coh);
    add_specs(coh);
    auto* bnd = app.add_subcommand("bound", "lower bound for a state and ensemble shape");
    add_params(bnd);
    add_specs(bnd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*ex1) return run_example(1, o);
        if (*ex2) return run_example(2, o);
        if (*scan) return run_scan(o);
        if (*verify) return run_verify(o);
        if (*rnd) return run_random(o);
        if (*coh) return run_query(false, o);
        if (*bnd) return run_query(true, o);
    } catch (const Exit& e) {
        return e.code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "ucoh: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
