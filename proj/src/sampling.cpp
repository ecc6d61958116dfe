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

#include "initfree/sampling.hpp"

#include <stdexcept>

namespace initfree {

AliasTable::AliasTable(std::span<const double> probs) {
    std::vector<double> kept;
    for (std::size_t y = 0; y < probs.size(); ++y) {
        if (probs[y] >= kClampThreshold) {
            outcomes_.push_back(y);
            kept.push_back(probs[y]);
        }
    }
    if (outcomes_.empty()) throw std::invalid_argument("AliasTable: empty support");

    const std::size_t k = kept.size();
    const double total = pairwise_sum(kept);
    std::vector<double> scaled(k);
    std::vector<std::uint32_t> small;
    std::vector<std::uint32_t> large;
    for (std::size_t i = 0; i < k; ++i) {
        scaled[i] = kept[i] * static_cast<double>(k) / total;
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    threshold_.assign(k, 1.0);
    alias_.resize(k);
    for (std::size_t i = 0; i < k; ++i) alias_[i] = static_cast<std::uint32_t>(i);
    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.back();
        small.pop_back();
        const std::uint32_t l = large.back();
        threshold_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    // Leftovers in either list are 1 up to rounding.
}

std::uint64_t AliasTable::sample(SplitMix64& rng) const {
    const std::size_t slot = static_cast<std::size_t>(rng.below(outcomes_.size()));
    const double coin = rng.uniform01();
    return outcomes_[coin < threshold_[slot] ? slot : alias_[slot]];
}

OutcomeDistribution empirical_distribution(unsigned n, std::span<const std::uint64_t> samples) {
    if (samples.empty()) throw std::invalid_argument("empirical_distribution: no samples");
    std::vector<double> counts(pow2(n), 0.0);
    for (std::uint64_t y : samples) counts.at(y) += 1.0;
    for (double& c : counts) c /= static_cast<double>(samples.size());
    return OutcomeDistribution(n, std::move(counts));
}

} // namespace initfree
