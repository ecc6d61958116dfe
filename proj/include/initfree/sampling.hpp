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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "initfree/qstate.hpp"
#include "initfree/rng.hpp"

namespace initfree {

/// Walker/Vose alias table over the support of a distribution. Outcomes
/// with probability below 1e-12 are left out, so they are never drawn.
class AliasTable {
  public:
    explicit AliasTable(std::span<const double> probs);
    explicit AliasTable(const OutcomeDistribution& dist) : AliasTable(dist.probs()) {}

    /// One draw: a uniform slot, then a biased coin between it and its alias.
    std::uint64_t sample(SplitMix64& rng) const;

    std::size_t support_size() const noexcept { return outcomes_.size(); }

  private:
    std::vector<std::uint64_t> outcomes_;
    std::vector<double> threshold_;
    std::vector<std::uint32_t> alias_;
};

/// Histogram of samples over [0, 2^n), normalized.
OutcomeDistribution empirical_distribution(unsigned n, std::span<const std::uint64_t> samples);

} // namespace initfree
