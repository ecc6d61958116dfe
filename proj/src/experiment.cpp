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

#include "initfree/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "initfree/function_table.hpp"
#include "initfree/instances.hpp"
#include "initfree/period.hpp"
#include "initfree/reference.hpp"
#include "initfree/simon.hpp"

namespace initfree {

using nlohmann::json;

// -------------------------------------------------------------- enum strings

const char* to_string(Problem p) noexcept { return p == Problem::simon ? "simon" : "period"; }

const char* to_string(AuxKind k) noexcept {
    switch (k) {
    case AuxKind::zero:
        return "zero";
    case AuxKind::random_pure:
        return "random-pure";
    case AuxKind::maximally_mixed:
        return "maximally-mixed";
    case AuxKind::random_mixed:
        return "random-mixed";
    }
    return "unknown";
}

const char* to_string(AveragingMode m) noexcept { return m == AveragingMode::exact ? "exact" : "sampled"; }

Problem parse_problem(const std::string& s) {
    if (s == "simon") return Problem::simon;
    if (s == "period") return Problem::period;
    throw ConfigError("problem", "expected simon or period, got '" + s + "'");
}

AuxKind parse_aux_kind(const std::string& s) {
    for (AuxKind k : {AuxKind::zero, AuxKind::random_pure, AuxKind::maximally_mixed, AuxKind::random_mixed}) {
        if (s == to_string(k)) return k;
    }
    throw ConfigError("aux", "expected zero, random-pure, maximally-mixed or random-mixed, got '" + s + "'");
}

AveragingMode parse_mode(const std::string& s) {
    if (s == "exact") return AveragingMode::exact;
    if (s == "sampled") return AveragingMode::sampled;
    throw ConfigError("mode", "expected exact or sampled, got '" + s + "'");
}

// -------------------------------------------------------------- validation

namespace {

constexpr unsigned kMaxTotalQubits = 24;

unsigned aux_width(const ExperimentConfig& c) { return c.problem == Problem::simon ? c.n : c.m; }

std::optional<FunctionTable> load_fixture(const ExperimentConfig& c) {
    if (!c.function_file) return std::nullopt;
    try {
        return load_function_table(*c.function_file);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("function-file", e.what());
    }
}

} // namespace

void validate(const ExperimentConfig& c) {
    if (c.trials < 1) throw ConfigError("trials", "must be at least 1");
    if (c.max_iters < 1) throw ConfigError("max-iters", "must be at least 1");
    if (c.mode == AveragingMode::sampled && c.samples < 1) throw ConfigError("samples", "must be at least 1");

    if (c.problem == Problem::simon) {
        if (c.n < 2) throw ConfigError("n", "Simon instances need n >= 2");
        if (2 * c.n > kMaxTotalQubits) throw ConfigError("n", "2n qubits exceed the simulator limit");
        if (c.mode == AveragingMode::exact && c.n > kMaxExactSimonBits) {
            throw ConfigError("n", "exact mode requires n <= 12");
        }
        if (c.m != 0 && c.m != c.n) throw ConfigError("m", "the Simon auxiliary register has exactly n qubits");
        if (c.period) throw ConfigError("period", "only applies to the period problem");
        if (c.hidden) {
            if (c.hidden->width() != c.n) throw ConfigError("hidden", "must have exactly n bits");
            if (c.hidden->is_zero()) throw ConfigError("hidden", "must be nonzero");
        }
    } else {
        if (c.n < 1) throw ConfigError("n", "must be at least 1");
        if (c.m < 1) throw ConfigError("m", "must be at least 1");
        if (c.n + c.m > kMaxTotalQubits) throw ConfigError("m", "n + m qubits exceed the simulator limit");
        if (c.mode == AveragingMode::exact && c.m > kMaxExactPeriodAuxBits) {
            throw ConfigError("m", "exact mode requires m <= 10");
        }
        if (c.hidden) throw ConfigError("hidden", "only applies to the Simon problem");
        const std::uint64_t limit = std::min(pow2(c.m), pow2(c.n) - 1);
        if (c.period) {
            if (*c.period < 1) throw ConfigError("period", "must be at least 1");
            if (*c.period > limit) {
                throw ConfigError("period", "must satisfy T <= 2^m and T < 2^n (T <= " + std::to_string(limit) + ")");
            }
        } else if (!c.function_file && limit < 2) {
            throw ConfigError("n", "random periods need min(2^m, 2^n - 1) >= 2");
        }
    }

    if (c.aux == AuxKind::random_mixed && (c.aux_rank < 1 || c.aux_rank > pow2(aux_width(c)))) {
        throw ConfigError("aux", "random-mixed rank must lie in [1, 2^width]");
    }

    if (auto f = load_fixture(c)) {
        if (f->domain_bits() != c.n) throw ConfigError("function-file", "domain_bits does not match --n");
        if (c.problem == Problem::simon) {
            if (f->codomain_bits() > c.n) throw ConfigError("function-file", "codomain wider than n bits");
            try {
                const SimonInstance inst = simon_from_table(*f);
                if (c.hidden && *c.hidden != inst.h) {
                    throw ConfigError("hidden", "does not match the fixture's hidden shift " + inst.h.to_string());
                }
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError("function-file", e.what());
            }
        } else {
            if (f->codomain_bits() > c.m) throw ConfigError("function-file", "codomain wider than m bits");
            try {
                const PeriodicInstance inst = periodic_from_table(*f);
                if (c.period && *c.period != inst.period) {
                    throw ConfigError("period", "does not match the fixture's period " + std::to_string(inst.period));
                }
                if (inst.period >= pow2(c.n)) throw ConfigError("function-file", "fixture has no observable period");
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError("function-file", e.what());
            }
        }
    }
}

// -------------------------------------------------------------- ensembles

namespace {

Amplitudes random_pure_state(unsigned m, SplitMix64& rng) {
    Amplitudes s(pow2(m));
    for (Complex& a : s) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = {re, im};
    }
    const double scale = 1.0 / std::sqrt(squared_norm(s));
    for (Complex& a : s) a *= scale;
    return s;
}

} // namespace

AuxEnsemble make_aux_ensemble(AuxKind kind, unsigned m, unsigned rank, SplitMix64& rng) {
    switch (kind) {
    case AuxKind::zero:
        return AuxEnsemble::basis(m, 0);
    case AuxKind::random_pure:
        return AuxEnsemble::pure(random_pure_state(m, rng));
    case AuxKind::maximally_mixed:
        return AuxEnsemble::maximally_mixed(m);
    case AuxKind::random_mixed: {
        if (rank < 1) throw std::invalid_argument("make_aux_ensemble: rank must be at least 1");
        std::vector<AuxEnsemble::Member> members;
        std::vector<double> raw;
        for (unsigned i = 0; i < rank; ++i) {
            double u = rng.uniform01();
            while (u <= 0.0) u = rng.uniform01();
            raw.push_back(-std::log(u));
            members.push_back({0.0, random_pure_state(m, rng)});
        }
        const double total = pairwise_sum(raw);
        for (unsigned i = 0; i < rank; ++i) members[i].weight = raw[i] / total;
        return AuxEnsemble(m, std::move(members));
    }
    }
    throw std::logic_error("make_aux_ensemble: unknown kind");
}

json config_to_json(const ExperimentConfig& c) {
    json j{{"problem", to_string(c.problem)},
           {"n", c.n},
           {"m", c.problem == Problem::simon ? c.n : c.m},
           {"hidden", c.hidden ? json(c.hidden->to_string()) : json()},
           {"period", c.period ? json(*c.period) : json()},
           {"aux", to_string(c.aux)},
           {"aux_rank", c.aux_rank},
           {"mode", to_string(c.mode)},
           {"samples", c.samples},
           {"trials", c.trials},
           {"max_iters", c.max_iters},
           {"seed", c.seed},
           {"function_file", c.function_file ? json(c.function_file->string()) : json()}};
    return j;
}

// -------------------------------------------------------------- trials

namespace {

std::vector<double> as_vector(const OutcomeDistribution& d) { return {d.probs().begin(), d.probs().end()}; }

std::string describe_worst(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    std::uint64_t worst_y = 0;
    double worst = -1.0;
    for (std::uint64_t y = 0; y < a.size(); ++y) {
        const double d = std::abs(a[y] - b[y]);
        if (d > worst) {
            worst = d;
            worst_y = y;
        }
    }
    std::ostringstream os;
    os << "y=" << worst_y << " |diff|=" << std::setprecision(17) << worst;
    return os.str();
}

struct TrialStreams {
    SplitMix64 instance;
    SplitMix64 aux;
    SplitMix64 run;
    std::uint64_t sampling_seed;

    TrialStreams(std::uint64_t seed, std::size_t trial)
        : instance(0), aux(0), run(0), sampling_seed(0) {
        const SplitMix64 root = SplitMix64(seed).split(trial);
        instance = root.split(0);
        aux = root.split(1);
        run = root.split(2);
        sampling_seed = root.split(3).next();
    }
};

SimonInstance build_simon(const ExperimentConfig& c, SplitMix64& rng) {
    if (c.function_file) {
        const FunctionTable raw = load_function_table(*c.function_file);
        // Widen the codomain to n bits so the oracle acts on the full register.
        return simon_from_table(FunctionTable(c.n, c.n, raw.values()));
    }
    return make_simon(c.n, c.hidden, rng);
}

PeriodicInstance build_period(const ExperimentConfig& c, SplitMix64& rng) {
    if (c.function_file) {
        const FunctionTable raw = load_function_table(*c.function_file);
        return periodic_from_table(FunctionTable(c.n, c.m, raw.values()));
    }
    std::uint64_t period = 0;
    if (c.period) {
        period = *c.period;
    } else {
        const std::uint64_t limit = std::min(pow2(c.m), pow2(c.n) - 1);
        period = 2 + rng.below(limit - 1);
    }
    return make_periodic(c.n, c.m, period, rng);
}

json aux_json(const ExperimentConfig& c, const AuxEnsemble& ens) {
    return json{{"kind", to_string(c.aux)}, {"qubits", ens.m()}, {"members", ens.size()}};
}

struct TrialOutcome {
    json record;
    bool success;
    std::size_t iterations;
    double distribution_error;
    double aux_recovery;
};

TrialOutcome simon_trial(const ExperimentConfig& c, std::size_t t, std::vector<std::string>& breaches) {
    TrialStreams streams(c.seed, t);
    const SimonInstance inst = build_simon(c, streams.instance);
    const AuxEnsemble ens = make_aux_ensemble(c.aux, inst.n, c.aux_rank, streams.aux);
    const std::string id = instance_id(inst);
    const OutcomeDistribution expected = reference::simon_uniform_on_orthogonal(inst);

    json record{{"trial", t}, {"instance", {{"id", id}, {"h", inst.h.to_string()}, {"function", inst.f}}}};
    record["aux"] = aux_json(c, ens);

    double error = 0.0;
    if (c.mode == AveragingMode::exact) {
        const OutcomeDistribution original = simon_original(inst);
        const OutcomeDistribution channel = simon_channel(inst, ens, ExactAveraging{});
        error = std::max(original.max_abs_diff(expected), channel.max_abs_diff(expected));
        if (inst.n <= 8) {
            const auto formula = reference::simon_expected_formula(inst).distribution;
            error = std::max(error, channel.max_abs_diff(formula));
        }
        record["channel_distribution"] = as_vector(channel);
        record["distribution_error"] = error;
        if (error > kExactnessGate) {
            breaches.push_back("channel-equality: instance " + id + " " + describe_worst(channel, expected));
        }
    } else {
        const OutcomeDistribution channel =
            simon_channel(inst, ens, SampledAveraging{c.samples, streams.sampling_seed});
        error = channel.total_variation(expected);
        record["channel_distribution"] = as_vector(channel);
        record["sampled_total_variation"] = error;
        for (std::uint64_t y = 0; y < channel.size(); ++y) {
            if (channel[y] > 0.0 && dot(y, inst.h.value()) != 0) {
                breaches.push_back("support: instance " + id + " sampled y=" + BitString(inst.n, y).to_string() +
                                   " outside the orthogonal subgroup");
            }
        }
    }

    const SimonRunReport report = simon_end_to_end(inst, ens, streams.run, c.max_iters);
    record["run"] = report;
    for (std::size_t i = 0; i < report.aux_recovery_per_iteration.size(); ++i) {
        if (report.aux_recovery_per_iteration[i] > kExactnessGate) {
            std::ostringstream os;
            os << "aux-recovery: instance " << id << " iteration " << i + 1 << " w=" << report.w_used[i].to_string()
               << " y=" << report.samples[i].to_string() << " distance=" << std::setprecision(17)
               << report.aux_recovery_per_iteration[i];
            breaches.push_back(os.str());
        }
    }
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        if (dot(report.samples[i], inst.h) != 0) {
            breaches.push_back("support: instance " + id + " w=" + report.w_used[i].to_string() +
                               " y=" + report.samples[i].to_string() + " outside the orthogonal subgroup");
        }
    }
    if (report.recovered_h && *report.recovered_h != inst.h) {
        breaches.push_back("recovery: instance " + id + " recovered h=" + report.recovered_h->to_string());
    }
    return {std::move(record), report.success, report.iterations, error, report.aux_recovery_distance};
}

TrialOutcome period_trial(const ExperimentConfig& c, std::size_t t, std::vector<std::string>& breaches) {
    TrialStreams streams(c.seed, t);
    const PeriodicInstance inst = build_period(c, streams.instance);
    const AuxEnsemble ens = make_aux_ensemble(c.aux, inst.m, c.aux_rank, streams.aux);
    const std::string id = instance_id(inst);
    const OutcomeDistribution expected = reference::period_p_formula(inst).distribution;

    json record{{"trial", t}, {"instance", {{"id", id}, {"T", inst.period}, {"function", inst.f}}}};
    record["aux"] = aux_json(c, ens);

    double error = 0.0;
    if (c.mode == AveragingMode::exact) {
        const OutcomeDistribution original = period_original(inst);
        const OutcomeDistribution channel = period_channel(inst, ens, ExactAveraging{});
        error = std::max(original.max_abs_diff(expected), channel.max_abs_diff(expected));
        record["channel_distribution"] = as_vector(channel);
        record["distribution_error"] = error;
        if (error > kExactnessGate) {
            breaches.push_back("channel-equality: instance " + id + " " + describe_worst(channel, expected));
        }
    } else {
        const OutcomeDistribution channel =
            period_channel(inst, ens, SampledAveraging{c.samples, streams.sampling_seed});
        error = channel.total_variation(expected);
        record["channel_distribution"] = as_vector(channel);
        record["sampled_total_variation"] = error;
    }
    record["good_mass_original"] = expected.mass_on(good_y_set(inst.domain_size(), inst.period));

    const PeriodRunReport report = period_end_to_end(inst, ens, streams.run, c.max_iters);
    record["run"] = report;
    for (std::size_t i = 0; i < report.aux_recovery_per_iteration.size(); ++i) {
        if (report.aux_recovery_per_iteration[i] > kExactnessGate) {
            std::ostringstream os;
            os << "aux-recovery: instance " << id << " iteration " << i + 1 << " w=" << report.w_used[i]
               << " y=" << report.samples[i] << " distance=" << std::setprecision(17)
               << report.aux_recovery_per_iteration[i];
            breaches.push_back(os.str());
        }
    }
    if (report.recovered_period && *report.recovered_period != inst.period) {
        breaches.push_back("recovery: instance " + id + " recovered T=" + std::to_string(*report.recovered_period));
    }
    return {std::move(record), report.success, report.iterations, error, report.aux_recovery_distance};
}

double median(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    if (v.size() % 2 == 1) return static_cast<double>(v[mid]);
    return 0.5 * static_cast<double>(v[mid - 1] + v[mid]);
}

json envelope_header(const ExperimentConfig& c, const char* command) {
    return json{{"tool", "initfree"}, {"version", kToolVersion}, {"command", command}, {"config", config_to_json(c)}};
}

} // namespace

RunResult run(const ExperimentConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    json trials = json::array();
    std::vector<std::size_t> iterations;
    std::size_t successes = 0;
    double max_error = 0.0;
    double max_recovery = 0.0;
    for (std::size_t t = 0; t < config.trials; ++t) {
        TrialOutcome o = config.problem == Problem::simon ? simon_trial(config, t, result.breaches)
                                                          : period_trial(config, t, result.breaches);
        successes += o.success ? 1 : 0;
        iterations.push_back(o.iterations);
        max_error = std::max(max_error, o.distribution_error);
        max_recovery = std::max(max_recovery, o.aux_recovery);
        trials.push_back(std::move(o.record));
    }
    double total_iters = 0.0;
    for (std::size_t i : iterations) total_iters += static_cast<double>(i);

    json& env = result.envelope;
    env = envelope_header(config, to_string(config.problem));
    env["trials"] = std::move(trials);
    env["aggregate"] = {{"trials", config.trials},
                        {"successes", successes},
                        {"success_rate", static_cast<double>(successes) / static_cast<double>(config.trials)},
                        {"mean_iterations", total_iters / static_cast<double>(config.trials)},
                        {"median_iterations", median(iterations)},
                        {"max_distribution_error", max_error},
                        {"max_aux_recovery_distance", max_recovery}};
    env["breaches"] = result.breaches;
    env["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

RunResult compare(const ExperimentConfig& config) {
    if (config.mode != AveragingMode::exact) throw ConfigError("mode", "compare requires exact mode");
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    json trials = json::array();
    double worst = 0.0;

    for (std::size_t t = 0; t < config.trials; ++t) {
        TrialStreams streams(config.seed, t);
        std::optional<OutcomeDistribution> original, channel, formula;
        std::string id;
        json instance;
        std::string provenance;
        if (config.problem == Problem::simon) {
            const SimonInstance inst = build_simon(config, streams.instance);
            const AuxEnsemble ens = make_aux_ensemble(config.aux, inst.n, config.aux_rank, streams.aux);
            id = instance_id(inst);
            instance = {{"id", id}, {"h", inst.h.to_string()}, {"function", inst.f}};
            original = simon_original(inst);
            channel = simon_channel(inst, ens, ExactAveraging{});
            auto f = reference::simon_expected_formula(inst);
            formula = std::move(f.distribution);
            provenance = f.provenance;
        } else {
            const PeriodicInstance inst = build_period(config, streams.instance);
            const AuxEnsemble ens = make_aux_ensemble(config.aux, inst.m, config.aux_rank, streams.aux);
            id = instance_id(inst);
            instance = {{"id", id}, {"T", inst.period}, {"function", inst.f}};
            original = period_original(inst);
            channel = period_channel(inst, ens, ExactAveraging{});
            auto f = reference::period_expected_formula(inst);
            formula = std::move(f.distribution);
            provenance = f.provenance;
        }
        const double oc = original->max_abs_diff(*channel);
        const double of = original->max_abs_diff(*formula);
        const double cf = channel->max_abs_diff(*formula);
        worst = std::max({worst, oc, of, cf});
        if (oc > kExactnessGate) {
            result.breaches.push_back("original-vs-channel: instance " + id + " " + describe_worst(*original, *channel));
        }
        if (of > kExactnessGate) {
            result.breaches.push_back("original-vs-formula: instance " + id + " " + describe_worst(*original, *formula));
        }
        if (cf > kExactnessGate) {
            result.breaches.push_back("channel-vs-formula: instance " + id + " " + describe_worst(*channel, *formula));
        }
        trials.push_back({{"trial", t},
                          {"instance", instance},
                          {"original", as_vector(*original)},
                          {"channel", as_vector(*channel)},
                          {"formula", as_vector(*formula)},
                          {"formula_provenance", provenance},
                          {"max_abs_diff",
                           {{"original_channel", oc}, {"original_formula", of}, {"channel_formula", cf}}}});
    }

    json& env = result.envelope;
    env = envelope_header(config, "compare");
    env["trials"] = std::move(trials);
    env["aggregate"] = {{"trials", config.trials}, {"max_pairwise_difference", worst}};
    env["breaches"] = result.breaches;
    env["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string dump_report(const json& envelope) { return envelope.dump(2) + "\n"; }

std::string render_table(const json& env) {
    std::ostringstream os;
    os << "initfree " << env.value("version", "") << "  " << env.value("command", "") << "\n";
    const json& cfg = env.at("config");
    os << "problem=" << cfg.at("problem").get<std::string>() << " n=" << cfg.at("n") << " m=" << cfg.at("m")
       << " aux=" << cfg.at("aux").get<std::string>() << " mode=" << cfg.at("mode").get<std::string>()
       << " seed=" << cfg.at("seed") << "\n\n";
    os << std::left << std::setw(8) << "trial" << std::setw(30) << "instance";
    if (env.at("command") == "compare") {
        os << std::setw(16) << "orig-chan" << std::setw(16) << "orig-formula" << std::setw(16) << "chan-formula"
           << "\n";
        for (const json& t : env.at("trials")) {
            const json& d = t.at("max_abs_diff");
            os << std::setw(8) << t.at("trial").get<std::size_t>() << std::setw(30)
               << t.at("instance").at("id").get<std::string>() << std::setprecision(3) << std::scientific
               << std::setw(16) << d.at("original_channel").get<double>() << std::setw(16)
               << d.at("original_formula").get<double>() << std::setw(16) << d.at("channel_formula").get<double>()
               << std::defaultfloat << "\n";
        }
    } else {
        os << std::setw(8) << "iters" << std::setw(10) << "success" << std::setw(14) << "recovered"
           << std::setw(16) << "dist-error" << "aux-distance\n";
        for (const json& t : env.at("trials")) {
            const json& r = t.at("run");
            const json& rec = r.contains("recovered_h") ? r.at("recovered_h") : r.at("recovered_T");
            const double err = t.contains("distribution_error") ? t.at("distribution_error").get<double>()
                                                                 : t.at("sampled_total_variation").get<double>();
            os << std::setw(8) << t.at("trial").get<std::size_t>() << std::setw(30)
               << t.at("instance").at("id").get<std::string>() << std::setw(8) << r.at("iterations").get<std::size_t>()
               << std::setw(10) << (r.at("success").get<bool>() ? "yes" : "no") << std::setw(14)
               << (rec.is_null() ? std::string("-") : rec.dump()) << std::setprecision(3) << std::scientific
               << std::setw(16) << err << r.at("aux_recovery_distance").get<double>() << std::defaultfloat << "\n";
        }
    }
    os << "\naggregate: " << env.at("aggregate").dump() << "\n";
    const json& breaches = env.at("breaches");
    os << "breaches: " << breaches.size() << "\n";
    for (const json& b : breaches) os << "  " << b.get<std::string>() << "\n";
    return os.str();
}

} // namespace initfree
