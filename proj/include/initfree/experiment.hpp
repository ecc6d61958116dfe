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
 * Seeded experiment runner behind the `initfree` command line tool.
 *
 * A run is a list of independent trials. Trial t draws everything from
 * SplitMix64(seed).split(t), which is further split into fixed sub-streams:
 *
 *   split(0)  instance construction
 *   split(1)  auxiliary ensemble
 *   split(2)  end-to-end loop (keys and measurement outcomes)
 *   split(3)  seed for sampled channel averaging
 *
 * so a given (config, seed) yields the same report on every build.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "initfree/bits.hpp"
#include "initfree/qstate.hpp"
#include "initfree/rng.hpp"

namespace initfree {

inline constexpr const char* kToolVersion = "1.0.0";

/// Gate for every exact equality check (channel vs original vs formula) and
/// for auxiliary recovery.
inline constexpr double kExactnessGate = 1e-10;

enum class Problem { simon, period };
enum class AuxKind { zero, random_pure, maximally_mixed, random_mixed };
enum class AveragingMode { exact, sampled };

struct ExperimentConfig {
    Problem problem = Problem::simon;
    unsigned n = 4;
    unsigned m = 0;
    std::optional<BitString> hidden;
    std::optional<std::uint64_t> period;
    AuxKind aux = AuxKind::maximally_mixed;
    unsigned aux_rank = 2;
    AveragingMode mode = AveragingMode::exact;
    std::size_t samples = 10000;
    std::size_t trials = 1;
    std::size_t max_iters = 64;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> function_file;
};

/// Invalid configuration; field() names the offending flag.
class ConfigError : public std::invalid_argument {
  public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument("--" + field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

const char* to_string(Problem p) noexcept;
const char* to_string(AuxKind k) noexcept;
const char* to_string(AveragingMode m) noexcept;
Problem parse_problem(const std::string& s);
AuxKind parse_aux_kind(const std::string& s);
AveragingMode parse_mode(const std::string& s);

/// Throws ConfigError on the first bad field.
void validate(const ExperimentConfig& config);

/// zero: |0..0>; random-pure: normalized complex Gaussian vector;
/// maximally-mixed: uniform over basis states; random-mixed: `rank` random
/// pure states with weights from normalized exponential draws.
AuxEnsemble make_aux_ensemble(AuxKind kind, unsigned m, unsigned rank, SplitMix64& rng);

nlohmann::json config_to_json(const ExperimentConfig& config);

struct RunResult {
    /// The ReportEnvelope.
    nlohmann::json envelope;
    /// One diagnostic per failed invariant. Empty on a clean run.
    std::vector<std::string> breaches;
};

/// End-to-end trials plus channel statistics. Deterministic given the seed,
/// apart from the "wall_time_seconds" field.
RunResult run(const ExperimentConfig& config);

/// Original, channel and formula distributions side by side with pairwise
/// maximum differences. Exact mode only.
RunResult compare(const ExperimentConfig& config);

/// Serialized report. Doubles print in shortest round-trip form.
std::string dump_report(const nlohmann::json& envelope);

/// Human-readable summary of an envelope.
std::string render_table(const nlohmann::json& envelope);

} // namespace initfree
