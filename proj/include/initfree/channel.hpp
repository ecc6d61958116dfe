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

/**
 * @file
 * Averaging over the random key w and over auxiliary ensemble members.
 *
 * Both algorithm families share the same structure: a unitary circuit
 * Lambda_w parameterized by a key w, applied to |0..0> (x) |Psi_k> for
 * every member of the auxiliary ensemble. The channel is the uniform
 * average over w of the p_k-weighted member outputs. Everything here is
 * generic over a `FinalState` callable
 *
 *     StateVector final_state(std::span<const Complex> aux, std::uint64_t w)
 *
 * that returns Lambda_w (|0..0> (x) aux).
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "initfree/qstate.hpp"
#include "initfree/rng.hpp"
#include "initfree/sampling.hpp"

namespace initfree {

struct ExactAveraging {};

/// Monte-Carlo estimate: `count` draws of (w, member, y).
struct SampledAveraging {
    std::size_t count;
    std::uint64_t seed;
};

using ChannelMode = std::variant<ExactAveraging, SampledAveraging>;

/// Sequential Neumaier accumulator. Summation order is fixed by the caller,
/// so results are bitwise reproducible.
class CompensatedSum {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

template <typename FinalState>
OutcomeDistribution average_channel(unsigned n_control, std::uint64_t key_count, const AuxEnsemble& ens,
                                    const ChannelMode& mode, FinalState&& final_state) {
    const std::uint64_t outcomes = pow2(n_control);
    if (const auto* sampled = std::get_if<SampledAveraging>(&mode)) {
        if (sampled->count == 0) throw std::invalid_argument("sampled channel averaging needs count > 0");
        SplitMix64 rng(sampled->seed);
        std::vector<double> weights;
        for (const auto& mem : ens.members()) weights.push_back(mem.weight);
        const AliasTable pick_member(weights);
        std::map<std::pair<std::uint64_t, std::uint64_t>, AliasTable> cache;
        std::vector<std::uint64_t> samples;
        samples.reserve(sampled->count);
        for (std::size_t s = 0; s < sampled->count; ++s) {
            const std::uint64_t w = rng.below(key_count);
            const std::uint64_t k = pick_member.sample(rng);
            auto it = cache.find({w, k});
            if (it == cache.end()) {
                const auto dist = control_marginal(final_state(ens.members()[k].state, w));
                it = cache.emplace(std::pair{w, k}, AliasTable(dist)).first;
            }
            samples.push_back(it->second.sample(rng));
        }
        return empirical_distribution(n_control, samples);
    }

    std::vector<CompensatedSum> acc(outcomes);
    const double key_weight = 1.0 / static_cast<double>(key_count);
    for (std::uint64_t w = 0; w < key_count; ++w) {
        for (const auto& mem : ens.members()) {
            if (mem.weight == 0.0) continue;
            const auto dist = control_marginal(final_state(mem.state, w));
            const double scale = key_weight * mem.weight;
            for (std::uint64_t y = 0; y < outcomes; ++y) acc[y].add(scale * dist[y]);
        }
    }
    std::vector<double> probs(outcomes);
    for (std::uint64_t y = 0; y < outcomes; ++y) probs[y] = acc[y].value();
    return OutcomeDistribution(n_control, std::move(probs));
}

/// (1/W) sum_w U_w rho U_w^dagger on the full joint space.
template <typename UnitaryForKey>
ComplexMatrix average_channel_density(const ComplexMatrix& rho, std::uint64_t key_count, UnitaryForKey&& unitary) {
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (std::uint64_t w = 0; w < key_count; ++w) {
        const ComplexMatrix u = unitary(w);
        out.noalias() += u * rho * u.adjoint();
    }
    return out / static_cast<double>(key_count);
}

/// One measured round on a mixed auxiliary register.
struct EnsembleRound {
    std::uint64_t y;
    /// p_k-weighted control distribution the outcome was drawn from.
    OutcomeDistribution mixture;
    /// Auxiliary ensemble after the measurement: members collapsed on y
    /// and reweighted by p_k P_k(y) / P(y).
    AuxEnsemble posterior;
};

template <typename FinalState>
EnsembleRound measure_round(unsigned n_control, const AuxEnsemble& ens, std::uint64_t w, SplitMix64& rng,
                            FinalState&& final_state) {
    const std::uint64_t outcomes = pow2(n_control);
    std::vector<StateVector> finals;
    finals.reserve(ens.size());
    std::vector<CompensatedSum> acc(outcomes);
    std::vector<OutcomeDistribution> member_dists;
    member_dists.reserve(ens.size());
    for (const auto& mem : ens.members()) {
        finals.push_back(final_state(mem.state, w));
        member_dists.push_back(control_marginal(finals.back()));
        for (std::uint64_t y = 0; y < outcomes; ++y) acc[y].add(mem.weight * member_dists.back()[y]);
    }
    std::vector<double> probs(outcomes);
    for (std::uint64_t y = 0; y < outcomes; ++y) probs[y] = acc[y].value();
    OutcomeDistribution mixture(n_control, std::move(probs));
    const std::uint64_t y = AliasTable(mixture).sample(rng);

    std::vector<AuxEnsemble::Member> members;
    std::vector<double> raw;
    for (std::size_t k = 0; k < ens.size(); ++k) {
        const double joint = ens.members()[k].weight * member_dists[k][y];
        if (joint <= 0.0) continue;
        raw.push_back(joint);
        members.push_back({joint, collapse_on_outcome(finals[k], y)});
    }
    const double total = pairwise_sum(raw);
    for (auto& mem : members) mem.weight /= total;
    return EnsembleRound{y, std::move(mixture), AuxEnsemble(ens.m(), std::move(members))};
}

} // namespace initfree
