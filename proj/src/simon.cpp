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

#include "initfree/simon.hpp"

#include <algorithm>
#include <stdexcept>

#include "initfree/qops.hpp"

namespace initfree {

const char* to_string(RunMode mode) noexcept {
    switch (mode) {
    case RunMode::original:
        return "original";
    case RunMode::initfree_fixed_w:
        return "initfree-fixed-w";
    case RunMode::initfree_channel:
        return "initfree-channel";
    }
    return "unknown";
}

std::string instance_id(const SimonInstance& inst) {
    return "simon-n" + std::to_string(inst.n) + "-h" + inst.h.to_string();
}

namespace {

void check_aux_width(const SimonInstance& inst, std::size_t aux_len) {
    if (aux_len != pow2(inst.n)) {
        throw std::invalid_argument("simon: auxiliary register must have " + std::to_string(inst.n) + " qubits");
    }
}

std::uint64_t argmax(const OutcomeDistribution& d) {
    const auto p = d.probs();
    return static_cast<std::uint64_t>(std::distance(p.begin(), std::max_element(p.begin(), p.end())));
}

} // namespace

OutcomeDistribution simon_original(const SimonInstance& inst) {
    Amplitudes zero(pow2(inst.n), Complex{});
    zero[0] = 1.0;
    StateVector s = make_product_state(BitString(inst.n, 0), zero);
    s = walsh_hadamard(s, Register::control);
    s = oracle_xor(s, inst.f);
    s = walsh_hadamard(s, Register::control);
    return control_marginal(s);
}

StateVector simon_initfree_state(const SimonInstance& inst, std::span<const Complex> aux, const BitString& w) {
    check_aux_width(inst, aux.size());
    if (w.width() != inst.n) throw std::invalid_argument("simon: key width must equal n");
    StateVector s = make_product_state(BitString(inst.n, 0), aux);
    s = walsh_hadamard(s, Register::control);
    s = oracle_xor(s, inst.f);
    s = phase_string(s, w);
    s = oracle_xor(s, inst.f);
    s = phase_string(s, w);
    s = walsh_hadamard(s, Register::control);
    return s;
}

FixedKeyRun simon_initfree_fixed_w(const SimonInstance& inst, std::span<const Complex> aux, const BitString& w) {
    const StateVector s = simon_initfree_state(inst, aux, w);
    OutcomeDistribution dist = control_marginal(s);
    Amplitudes out = collapse_on_outcome(s, argmax(dist));
    const double fidelity = overlap_magnitude(aux, out);
    return FixedKeyRun{std::move(dist), std::move(out), fidelity};
}

OutcomeDistribution simon_channel(const SimonInstance& inst, const AuxEnsemble& ens, const ChannelMode& mode) {
    if (ens.m() != inst.n) throw std::invalid_argument("simon_channel: ensemble width must equal n");
    if (std::holds_alternative<ExactAveraging>(mode) && inst.n > kMaxExactSimonBits) {
        throw std::invalid_argument("simon_channel: exact averaging limited to n <= 12");
    }
    return average_channel(inst.n, pow2(inst.n), ens, mode, [&](std::span<const Complex> aux, std::uint64_t w) {
        return simon_initfree_state(inst, aux, BitString(inst.n, w));
    });
}

ComplexMatrix simon_channel_density(const SimonInstance& inst, const AuxEnsemble& ens) {
    if (ens.m() != inst.n) throw std::invalid_argument("simon_channel_density: ensemble width must equal n");
    const ComplexMatrix rho = joint_initial_density(inst.n, ens);
    return average_channel_density(rho, pow2(inst.n), [&](std::uint64_t key) {
        const BitString w(inst.n, key);
        return matrix_of(inst.n, inst.n, [&](const StateVector& in) {
            StateVector s = walsh_hadamard(in, Register::control);
            s = oracle_xor(s, inst.f);
            s = phase_string(s, w);
            s = oracle_xor(s, inst.f);
            s = phase_string(s, w);
            return walsh_hadamard(s, Register::control);
        });
    });
}

// ---------------------------------------------------------------- GF(2)

Gf2System::Gf2System(unsigned n) : n_(n), pivot_(n, 0) {
    if (n == 0 || n > kMaxBits) throw std::invalid_argument("Gf2System: bad width");
}

bool Gf2System::add(const BitString& row) {
    if (row.width() != n_) throw std::invalid_argument("Gf2System: row width mismatch");
    rows_.push_back(row);
    std::uint64_t r = row.value();
    for (unsigned b = n_; b-- > 0;) {
        if (((r >> b) & 1U) && pivot_[b]) r ^= pivot_[b];
    }
    if (r == 0) return false;
    const unsigned lead = static_cast<unsigned>(std::bit_width(r)) - 1;
    // Keep the basis fully reduced: clear the new pivot bit from every other row.
    for (unsigned b = 0; b < n_; ++b) {
        if (pivot_[b] && ((pivot_[b] >> lead) & 1U)) pivot_[b] ^= r;
    }
    pivot_[lead] = r;
    ++rank_;
    return true;
}

std::vector<std::uint64_t> Gf2System::nullspace_basis() const {
    // Free columns are the non-pivot bits. For a free bit f the solution sets
    // h_f = 1, other free bits 0, and each pivot bit p to row_p's bit f.
    std::vector<std::uint64_t> basis;
    for (unsigned f = 0; f < n_; ++f) {
        if (pivot_[f]) continue;
        std::uint64_t h = std::uint64_t{1} << f;
        for (unsigned p = 0; p < n_; ++p) {
            if (pivot_[p] && ((pivot_[p] >> f) & 1U)) h |= std::uint64_t{1} << p;
        }
        basis.push_back(h);
    }
    return basis;
}

std::optional<BitString> solve_hidden_shift(const Gf2System& sys) {
    if (sys.rank() == sys.n()) {
        throw std::domain_error("solve_hidden_shift: rows have full rank " + std::to_string(sys.n()) +
                                "; only h = 0 is orthogonal to all of them, contradicting the promise");
    }
    if (sys.rank() + 1 < sys.n()) return std::nullopt;
    const auto basis = sys.nullspace_basis();
    return BitString(sys.n(), basis.front());
}

// ---------------------------------------------------------------- end to end

void to_json(nlohmann::json& j, const SimonRunReport& r) {
    auto bits = [](const std::vector<BitString>& v) {
        std::vector<std::string> out;
        out.reserve(v.size());
        for (const auto& b : v) out.push_back(b.to_string());
        return out;
    };
    j = nlohmann::json{{"instance_id", r.instance_id},
                       {"mode", to_string(r.mode)},
                       {"w_used", bits(r.w_used)},
                       {"distribution", std::vector<double>(r.distribution.probs().begin(),
                                                            r.distribution.probs().end())},
                       {"aux_recovery_distance", r.aux_recovery_distance},
                       {"aux_recovery_per_iteration", r.aux_recovery_per_iteration},
                       {"samples", bits(r.samples)},
                       {"recovered_h", r.recovered_h ? nlohmann::json(r.recovered_h->to_string()) : nlohmann::json()},
                       {"final_rank", r.final_rank},
                       {"iterations", r.iterations},
                       {"success", r.success}};
}

SimonRunReport simon_end_to_end(const SimonInstance& inst, const AuxEnsemble& ens, SplitMix64& rng,
                                std::size_t max_iters) {
    if (max_iters < 1) throw std::invalid_argument("simon_end_to_end: max_iters must be at least 1");
    if (ens.m() != inst.n) throw std::invalid_argument("simon_end_to_end: ensemble width must equal n");

    const DensityMatrix rho_b = ensemble_to_density(ens);
    const std::uint64_t outcomes = pow2(inst.n);
    AuxEnsemble current = ens;
    Gf2System sys(inst.n);
    std::vector<BitString> keys;
    std::vector<BitString> samples;
    std::vector<double> distances;
    std::vector<CompensatedSum> mean(outcomes);
    std::optional<BitString> recovered;

    auto final_state = [&](std::span<const Complex> aux, std::uint64_t w) {
        return simon_initfree_state(inst, aux, BitString(inst.n, w));
    };

    std::size_t iter = 0;
    while (iter < max_iters) {
        ++iter;
        const BitString w(inst.n, rng.below(outcomes));
        EnsembleRound round = measure_round(inst.n, current, w.value(), rng, final_state);
        keys.push_back(w);
        samples.emplace_back(inst.n, round.y);
        for (std::uint64_t y = 0; y < outcomes; ++y) mean[y].add(round.mixture[y]);
        current = std::move(round.posterior);
        distances.push_back(trace_distance(ensemble_to_density(current), rho_b));

        sys.add(samples.back());
        if (sys.rank() + 1 >= inst.n) {
            recovered = solve_hidden_shift(sys);
            break;
        }
    }

    std::vector<double> probs(outcomes);
    for (std::uint64_t y = 0; y < outcomes; ++y) probs[y] = mean[y].value() / static_cast<double>(iter);
    const double worst = distances.empty() ? 0.0 : *std::max_element(distances.begin(), distances.end());
    const bool success = recovered.has_value() && *recovered == inst.h;
    return SimonRunReport{instance_id(inst),
                          RunMode::initfree_channel,
                          std::move(keys),
                          OutcomeDistribution(inst.n, std::move(probs)),
                          worst,
                          std::move(distances),
                          std::move(samples),
                          recovered,
                          sys.rank(),
                          iter,
                          success};
}

} // namespace initfree
