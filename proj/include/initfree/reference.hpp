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
 * Closed-form outcome probabilities, evaluated term by term.
 *
 * Nothing in here touches StateVector or the unitaries in qops.hpp; these
 * are the independent side of every engine-versus-formula comparison. The
 * only shared pieces are the instance tables and the OutcomeDistribution
 * container.
 *
 * Each formula result is checked for normalization rather than
 * renormalized: a total off 1 by more than 1e-8 means the formula was
 * transcribed wrong and is reported as std::logic_error.
 */

#pragma once

#include <cstdint>
#include <string>

#include "initfree/bits.hpp"
#include "initfree/instances.hpp"
#include "initfree/qstate.hpp"

namespace initfree::reference {

struct FormulaResult {
    OutcomeDistribution distribution;
    /// Which closed form produced the numbers.
    std::string provenance;
};

/// P_w(y) = (4/|G|^2) |sum over cosets x of (-1)^{w.f(x)} (-1)^{x.y}|^2 for
/// y in H-perp, 0 elsewhere. One representative per coset: min(x, x^h).
FormulaResult simon_pw_formula(const SimonInstance& inst, const BitString& w);

/// (1/|G|) sum_w P_w(y), by an explicit outer loop over every key.
FormulaResult simon_expected_formula(const SimonInstance& inst);

/// P(y) = (1/N^2) sum_{x<T} |sum_{j<A_x} e^{2 pi i y j T / N}|^2 with A_x
/// terms in the inner sum.
FormulaResult period_p_formula(const PeriodicInstance& inst);

/// P_w(y) = (1/N^2) |sum_{x<T} sum_{j<A_x} e^{2 pi i y (x+jT)/N} e^{2 pi i w f(x)/M}|^2.
FormulaResult period_pw_formula(const PeriodicInstance& inst, std::uint64_t w);

/// (1/M) sum_w P_w(y), by an explicit outer loop over every key.
FormulaResult period_expected_formula(const PeriodicInstance& inst);

/// 2/|G| on H-perp, 0 elsewhere.
OutcomeDistribution simon_uniform_on_orthogonal(const SimonInstance& inst);

} // namespace initfree::reference
