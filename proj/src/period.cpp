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

#include "initfree/period.hpp"

#include <algorithm>
#include <stdexcept>

#include "initfree/qops.hpp"

namespace initfree {

std::string instance_id(const PeriodicInstance& inst) {
    return "period-n" + std::to_string(inst.n) + "-m" + std::to_string(inst.m) + "-T" + std::to_string(inst.period);
}

namespace {

// Control registers at or above this size use the FFT kernel; the dense
// loop is kept for the small sizes where it is cheap.
constexpr unsigned kFastQftThreshold = 6;

StateVector control_qft(const StateVector& s) {
    return s.n_control() >= kFastQftThreshold ? qft_fast(s, Register::control) : qft(s, Register::control);
}

void check_aux_width(const PeriodicInstance& inst, std::size_t aux_len) {
    if (aux_len != inst.modulus()) {
        throw std::invalid_argument("period: auxiliary register must have " + std::to_string(inst.m) + " qubits");
    }
}

std::uint64_t argmax(const OutcomeDistribution& d) {
    const auto p = d.probs();
    return static_cast<std::uint64_t>(std::distance(p.begin(), std::max_element(p.begin(), p.end())));
}

bool shift_invariant(const FunctionTable& f, std::uint64_t q) {
    const std::uint64_t size = f.domain_size();
    if (q < 1 || q >= size) return false;
    for (std::uint64_t x = 0; x + q < size; ++x) {
        if (f(x) != f(x + q)) return false;
    }
    return true;
}

} // namespace

OutcomeDistribution period_original(const PeriodicInstance& inst) {
    Amplitudes zero(inst.modulus(), Complex{});
    zero[0] = 1.0;
    StateVector s = make_product_state(BitString(inst.n, 0), zero);
    s = control_qft(s);
    s = oracle_add(s, inst.f, inst.modulus());
    s = control_qft(s);
    return control_marginal(s);
}

StateVector period_initfree_state(const PeriodicInstance& inst, std::span<const Complex> aux, std::uint64_t w) {
    check_aux_width(inst, aux.size());
    if (w >= inst.modulus()) throw std::invalid_argument("period: key w must be below M = 2^m");
    StateVector s = make_product_state(BitString(inst.n, 0), aux);
    s = control_qft(s);
    s = oracle_add(s, inst.f, inst.modulus());
    s = phase_negate(s, w, inst.modulus());
    s = oracle_add(s, inst.f, inst.modulus());
    s = phase_negate(s, w, inst.modulus());
    s = control_qft(s);
    return s;
}

FixedKeyRun period_initfree_fixed_w(const PeriodicInstance& inst, std::span<const Complex> aux, std::uint64_t w) {
    const StateVector s = period_initfree_state(inst, aux, w);
    OutcomeDistribution dist = control_marginal(s);
    Amplitudes out = collapse_on_outcome(s, argmax(dist));
    const double fidelity = overlap_magnitude(aux, out);
    return FixedKeyRun{std::move(dist), std::move(out), fidelity};
}

OutcomeDistribution period_channel(const PeriodicInstance& inst, const AuxEnsemble& ens, const ChannelMode& mode) {
    if (ens.m() != inst.m) throw std::invalid_argument("period_channel: ensemble width must equal m");
    if (std::holds_alternative<ExactAveraging>(mode) && inst.m > kMaxExactPeriodAuxBits) {
        throw std::invalid_argument("period_channel: exact averaging limited to m <= 10");
    }
    return average_channel(inst.n, inst.modulus(), ens, mode, [&](std::span<const Complex> aux, std::uint64_t w) {
        return period_initfree_state(inst, aux, w);
    });
}

ComplexMatrix period_channel_density(const PeriodicInstance& inst, const AuxEnsemble& ens) {
    if (ens.m() != inst.m) throw std::invalid_argument("period_channel_density: ensemble width must equal m");
    const ComplexMatrix rho = joint_initial_density(inst.n, ens);
    return average_channel_density(rho, inst.modulus(), [&](std::uint64_t w) {
        return matrix_of(inst.n, inst.m, [&](const StateVector& in) {
            StateVector s = qft(in, Register::control);
            s = oracle_add(s, inst.f, inst.modulus());
            s = phase_negate(s, w, inst.modulus());
            s = oracle_add(s, inst.f, inst.modulus());
            s = phase_negate(s, w, inst.modulus());
            return qft(s, Register::control);
        });
    });
}

// ------------------------------------------------------ continued fractions

std::vector<Convergent> continued_fraction_candidates(std::uint64_t y, std::uint64_t N) {
    if (N == 0 || y >= N) throw std::invalid_argument("continued_fraction_candidates: need 0 <= y < N");
    std::vector<Convergent> out;
    // h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1.
    std::uint64_t h1 = 1, h2 = 0;
    std::uint64_t k1 = 0, k2 = 1;
    std::uint64_t num = y;
    std::uint64_t den = N;
    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t h = a * h1 + h2;
        const std::uint64_t k = a * k1 + k2;
        out.push_back({h, k});
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        const std::uint64_t r = num % den;
        num = den;
        den = r;
    }
    return out;
}

std::vector<std::uint64_t> candidate_periods(std::uint64_t y, std::uint64_t N, std::uint64_t max_period) {
    if (max_period > N) throw std::invalid_argument("candidate_periods: max_period must not exceed N");
    std::vector<std::uint64_t> out;
    for (const Convergent& c : continued_fraction_candidates(y, N)) {
        if (c.q > max_period) break;
        // |y/N - k/q| <= 1/(2N)  <=>  2 |y q - k N| <= q
        const auto lhs = static_cast<std::int64_t>(y * c.q) - static_cast<std::int64_t>(c.k * N);
        if (2 * static_cast<std::uint64_t>(std::abs(lhs)) > c.q) continue;
        for (std::uint64_t multiple = c.q; multiple <= max_period; multiple += c.q) out.push_back(multiple);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool verify_period(const FunctionTable& f, std::uint64_t q) {
    if (!shift_invariant(f, q)) return false;
    for (std::uint64_t d = 1; d < q; ++d) {
        if (q % d == 0 && shift_invariant(f, d)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- end to end

void to_json(nlohmann::json& j, const PeriodRunReport& r) {
    j = nlohmann::json{{"instance_id", r.instance_id},
                       {"mode", to_string(r.mode)},
                       {"w_used", r.w_used},
                       {"distribution", std::vector<double>(r.distribution.probs().begin(),
                                                            r.distribution.probs().end())},
                       {"good_mass", r.good_mass},
                       {"aux_recovery_distance", r.aux_recovery_distance},
                       {"aux_recovery_per_iteration", r.aux_recovery_per_iteration},
                       {"samples", r.samples},
                       {"recovered_T", r.recovered_period ? nlohmann::json(*r.recovered_period) : nlohmann::json()},
                       {"iterations", r.iterations},
                       {"success", r.success}};
}

PeriodRunReport period_end_to_end(const PeriodicInstance& inst, const AuxEnsemble& ens, SplitMix64& rng,
                                  std::size_t max_iters) {
    if (max_iters < 1) throw std::invalid_argument("period_end_to_end: max_iters must be at least 1");
    if (ens.m() != inst.m) throw std::invalid_argument("period_end_to_end: ensemble width must equal m");

    const std::uint64_t N = inst.domain_size();
    const std::uint64_t max_period = std::min(inst.modulus(), N - 1);
    const DensityMatrix rho_b = ensemble_to_density(ens);
    AuxEnsemble current = ens;
    std::vector<std::uint64_t> keys;
    std::vector<std::uint64_t> samples;
    std::vector<double> distances;
    std::vector<CompensatedSum> mean(N);
    std::optional<std::uint64_t> recovered;

    auto final_state = [&](std::span<const Complex> aux, std::uint64_t w) {
        return period_initfree_state(inst, aux, w);
    };

    std::size_t iter = 0;
    while (iter < max_iters && !recovered) {
        ++iter;
        const std::uint64_t w = rng.below(inst.modulus());
        EnsembleRound round = measure_round(inst.n, current, w, rng, final_state);
        keys.push_back(w);
        samples.push_back(round.y);
        for (std::uint64_t y = 0; y < N; ++y) mean[y].add(round.mixture[y]);
        current = std::move(round.posterior);
        distances.push_back(trace_distance(ensemble_to_density(current), rho_b));

        for (std::uint64_t q : candidate_periods(round.y, N, max_period)) {
            if (verify_period(inst.f, q)) {
                recovered = q;
                break;
            }
        }
    }

    std::vector<double> probs(N);
    for (std::uint64_t y = 0; y < N; ++y) probs[y] = mean[y].value() / static_cast<double>(iter);
    OutcomeDistribution dist(inst.n, std::move(probs));
    const auto good = good_y_set(N, inst.period);
    const double good_mass = dist.mass_on(good);
    const double worst = *std::max_element(distances.begin(), distances.end());
    const bool success = recovered.has_value() && *recovered == inst.period;
    return PeriodRunReport{instance_id(inst),
                           RunMode::initfree_channel,
                           std::move(keys),
                           std::move(dist),
                           good_mass,
                           worst,
                           std::move(distances),
                           std::move(samples),
                           recovered,
                           iter,
                           success};
}

} // namespace initfree
