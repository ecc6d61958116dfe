// Copyright 2026 The initfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// initfree: run Simon / period-finding experiments with an uninitialized
// auxiliary register and emit JSON reports.
//
// Exit status: 0 clean run, 1 usage error, 2 invariant breach.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "initfree/experiment.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitBreach = 2;

struct RawOptions {
    std::string problem = "simon";
    unsigned n = 4;
    unsigned m = 0;
    std::string hidden;
    std::uint64_t period = 0;
    std::string aux = "maximally-mixed";
    std::string mode = "exact";
    std::size_t samples = 10000;
    std::size_t trials = 1;
    std::size_t max_iters = 64;
    std::uint64_t seed = 0;
    std::string out;
    std::string function_file;
    bool table = false;
};

void add_common(CLI::App* cmd, RawOptions& o) {
    cmd->add_option("--n", o.n, "control qubits (Simon: also auxiliary qubits)");
    cmd->add_option("--m", o.m, "auxiliary qubits for period finding");
    cmd->add_option("--hidden", o.hidden, "Simon hidden shift as a bit string, e.g. 0110");
    cmd->add_option("--period", o.period, "period T for period finding");
    cmd->add_option("--aux", o.aux, "zero | random-pure | maximally-mixed | random-mixed[:rank]");
    cmd->add_option("--mode", o.mode, "exact | sampled channel averaging");
    cmd->add_option("--samples", o.samples, "draws for sampled averaging");
    cmd->add_option("--trials", o.trials, "independent seeded trials");
    cmd->add_option("--max-iters", o.max_iters, "measurement rounds per end-to-end trial");
    cmd->add_option("--seed", o.seed, "64-bit master seed");
    cmd->add_option("--out", o.out, "write the JSON report here");
    cmd->add_option("--function-file", o.function_file, "FunctionTable JSON fixture");
    cmd->add_flag("--table", o.table, "print a summary table to standard output");
}

initfree::ExperimentConfig to_config(const RawOptions& o, initfree::Problem problem) {
    initfree::ExperimentConfig c;
    c.problem = problem;
    c.n = o.n;
    c.m = o.m;
    if (!o.hidden.empty()) {
        try {
            c.hidden = initfree::BitString::parse(o.hidden);
        } catch (const std::invalid_argument& e) {
            throw initfree::ConfigError("hidden", e.what());
        }
    }
    if (o.period != 0) c.period = o.period;
    std::string aux = o.aux;
    if (const auto colon = aux.find(':'); colon != std::string::npos) {
        try {
            c.aux_rank = static_cast<unsigned>(std::stoul(aux.substr(colon + 1)));
        } catch (const std::exception&) {
            throw initfree::ConfigError("aux", "bad rank in '" + aux + "'");
        }
        aux.resize(colon);
        if (aux != "random-mixed") throw initfree::ConfigError("aux", "only random-mixed takes a rank");
    }
    c.aux = initfree::parse_aux_kind(aux);
    c.mode = initfree::parse_mode(o.mode);
    c.samples = o.samples;
    c.trials = o.trials;
    c.max_iters = o.max_iters;
    c.seed = o.seed;
    if (!o.function_file.empty()) c.function_file = o.function_file;
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Initialization-free Simon and period-finding simulator"};
    app.set_version_flag("--version", std::string(initfree::kToolVersion));
    app.require_subcommand(1);

    RawOptions opts;
    auto* simon = app.add_subcommand("simon", "end-to-end Simon trials");
    auto* period = app.add_subcommand("period", "end-to-end period-finding trials");
    auto* compare = app.add_subcommand("compare", "original vs channel vs formula distributions");
    add_common(simon, opts);
    add_common(period, opts);
    add_common(compare, opts);
    compare->add_option("--problem", opts.problem, "simon | period");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    initfree::RunResult result;
    try {
        if (simon->parsed()) {
            result = initfree::run(to_config(opts, initfree::Problem::simon));
        } else if (period->parsed()) {
            result = initfree::run(to_config(opts, initfree::Problem::period));
        } else {
            result = initfree::compare(to_config(opts, initfree::parse_problem(opts.problem)));
        }
    } catch (const initfree::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBreach;
    }

    const std::string report = initfree::dump_report(result.envelope);
    if (!opts.out.empty()) {
        std::ofstream out(opts.out);
        if (!out) {
            std::cerr << "cannot write " << opts.out << "\n";
            return kExitUsage;
        }
        out << report;
    }
    if (opts.table) {
        std::cout << initfree::render_table(result.envelope);
    } else if (opts.out.empty()) {
        std::cout << report;
    }

    for (const auto& b : result.breaches) std::cerr << "invariant breach: " << b << "\n";
    return result.breaches.empty() ? 0 : kExitBreach;
}
