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

#include <cmath>
#include <complex>
#include <vector>

#include "initfree/qstate.hpp"
#include "initfree/rng.hpp"

namespace initfree::test {

inline Amplitudes random_unit_vector(std::size_t dim, SplitMix64& rng) {
    Amplitudes v(dim);
    for (Complex& a : v) a = {rng.normal(), rng.normal()};
    const double s = 1.0 / std::sqrt(squared_norm(v));
    for (Complex& a : v) a *= s;
    return v;
}

inline StateVector random_state(unsigned n_control, unsigned n_aux, SplitMix64& rng) {
    return StateVector(n_control, n_aux, random_unit_vector(pow2(n_control + n_aux), rng));
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

} // namespace initfree::test
