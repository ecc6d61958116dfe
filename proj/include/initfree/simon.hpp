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
 * Simon's algorithm, in its textbook form and in the initialization-free
 * form that sandwiches a random phase string S_w between two XOR-oracle
 * calls and leaves the auxiliary register untouched.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "initfree/bits.hpp"
#include "initfree/channel.hpp"
#include "initfree/instances.hpp"
#include "initfree/qstate.hpp"
#include "initfree/rng.hpp"

namespace initfree {

enum class RunMode { original, initfree_fixed_w, initfree_channel };

const char* to_string(RunMode mode) noexcept;

/// Exact channel averaging walks all 2^n keys; keep it desk sized.
inline constexpr unsigned kMaxExactSimonBits = 12;

std::string instance_id(const SimonInstance& inst);

/// (W (x) I) U_f (W (x) I) |0^n>|0^n>, measured on the control register.
OutcomeDistribution simon_original(const SimonInstance& inst);

/// Final joint state of the initialization-free circuit for key w:
/// (W (x) I)(I (x) S_w) U_f (I (x) S_w) U_f (W (x) I) |0^n> (x) aux.
StateVector simon_initfree_state(const SimonInstance& inst, std::span<const Complex> aux, const BitString& w);

struct FixedKeyRun {
    OutcomeDistribution distribution;
    /// Auxiliary state conditioned on the most likely outcome.
    Amplitudes aux_out;
    /// |<aux_in|aux_out>|.
    double aux_fidelity;
};

FixedKeyRun simon_initfree_fixed_w(const SimonInstance& inst, std::span<const Complex> aux, const BitString& w);

/// Control distribution of the w-averaged channel applied to |0^n><0^n| (x) rho_B.
OutcomeDistribution simon_channel(const SimonInstance& inst, const AuxEnsemble& ens, const ChannelMode& mode);

/// Same channel on the full density matrix, (1/|G|) sum_w L_w rho L_w^dagger.
/// Dense; requires 2n <= kMaxDensityQubits.
ComplexMatrix simon_channel_density(const SimonInstance& inst, const AuxEnsemble& ens);

/// Rows y collected from measurements, kept in reduced echelon form.
class Gf2System {
  public:
    explicit Gf2System(unsigned n);

    /// Returns true if the row raised the rank.
    bool add(const BitString& row);

    unsigned n() const noexcept { return n_; }
    unsigned rank() const noexcept { return rank_; }
    const std::vector<BitString>& rows() const noexcept { return rows_; }

    /// Basis of {h : h.y = 0 for every row}.
    std::vector<std::uint64_t> nullspace_basis() const;

  private:
    unsigned n_;
    unsigned rank_ = 0;
    std::vector<BitString> rows_;
    // pivot_[b] holds the reduced row whose leading bit is b, or 0.
    std::vector<std::uint64_t> pivot_;
};

/// Unique nonzero h* orthogonal to every row when the rank is n - 1;
/// std::nullopt when the rank is lower. Throws std::domain_error at full
/// rank, which no two-to-one instance can produce.
std::optional<BitString> solve_hidden_shift(const Gf2System& sys);

struct SimonRunReport {
    std::string instance_id;
    RunMode mode;
    std::vector<BitString> w_used;
    /// Mean of the per-round distributions the samples were drawn from.
    OutcomeDistribution distribution;
    /// Largest trace distance between the reused auxiliary state and rho_B.
    double aux_recovery_distance;
    std::vector<double> aux_recovery_per_iteration;
    std::vector<BitString> samples;
    std::optional<BitString> recovered_h;
    unsigned final_rank;
    std::size_t iterations;
    bool success;
};

void to_json(nlohmann::json& j, const SimonRunReport& r);

/// Draws a fresh key every round, samples y, and stops once the collected
/// rows reach rank n - 1. The same auxiliary ensemble is carried from round
/// to round with no re-preparation.
SimonRunReport simon_end_to_end(const SimonInstance& inst, const AuxEnsemble& ens, SplitMix64& rng,
                                std::size_t max_iters);

} // namespace initfree
