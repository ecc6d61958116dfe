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
 * Period finding over Z_{2^n}: the QFT-based circuit with an additive
 * oracle, its initialization-free variant built around the phased negation
 * U_w, channel averaging, and continued-fraction post-processing.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "initfree/channel.hpp"
#include "initfree/instances.hpp"
#include "initfree/qstate.hpp"
#include "initfree/rng.hpp"
#include "initfree/simon.hpp"

namespace initfree {

inline constexpr unsigned kMaxExactPeriodAuxBits = 10;

std::string instance_id(const PeriodicInstance& inst);

/// (F (x) I) U_f (F (x) I) |0^n>|0^m>, measured on the control register.
OutcomeDistribution period_original(const PeriodicInstance& inst);

/// (F (x) I)(I (x) U_w) U_f (I (x) U_w) U_f (F (x) I) |0^n> (x) aux.
StateVector period_initfree_state(const PeriodicInstance& inst, std::span<const Complex> aux, std::uint64_t w);

FixedKeyRun period_initfree_fixed_w(const PeriodicInstance& inst, std::span<const Complex> aux, std::uint64_t w);

/// Control distribution of the channel (1/M) sum_w L_w rho L_w^dagger.
OutcomeDistribution period_channel(const PeriodicInstance& inst, const AuxEnsemble& ens, const ChannelMode& mode);

/// Full density-matrix evaluation of the same channel; n + m <= kMaxDensityQubits.
ComplexMatrix period_channel_density(const PeriodicInstance& inst, const AuxEnsemble& ens);

/// k/q in lowest terms.
struct Convergent {
    std::uint64_t k;
    std::uint64_t q;
    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Every convergent of y/N from the Euclidean expansion, in order; the last
/// one is y/N reduced.
std::vector<Convergent> continued_fraction_candidates(std::uint64_t y, std::uint64_t N);

/// Denominators q <= max_period of convergents with |y/N - k/q| <= 1/(2N),
/// together with their multiples up to max_period. Ascending, no duplicates.
std::vector<std::uint64_t> candidate_periods(std::uint64_t y, std::uint64_t N, std::uint64_t max_period);

/// True iff f(x) == f(x + q) wherever x + q < N and no proper divisor of q
/// passes the same test. Shifts q >= N leave nothing to check and fail.
bool verify_period(const FunctionTable& f, std::uint64_t q);

struct PeriodRunReport {
    std::string instance_id;
    RunMode mode;
    std::vector<std::uint64_t> w_used;
    /// Mean of the per-round distributions the samples were drawn from.
    OutcomeDistribution distribution;
    double good_mass;
    double aux_recovery_distance;
    std::vector<double> aux_recovery_per_iteration;
    std::vector<std::uint64_t> samples;
    std::optional<std::uint64_t> recovered_period;
    std::size_t iterations;
    bool success;
};

void to_json(nlohmann::json& j, const PeriodRunReport& r);

/// Draw w, sample y, try the candidate periods of y/N smallest first, and
/// stop at the first that verifies. The auxiliary ensemble is reused.
PeriodRunReport period_end_to_end(const PeriodicInstance& inst, const AuxEnsemble& ens, SplitMix64& rng,
                                  std::size_t max_iters);

} // namespace initfree
