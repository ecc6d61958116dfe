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
 * The unitaries used by both algorithm families, as pure maps on
 * StateVector. Oracles are table driven; nothing is decomposed into gates.
 */

#pragma once

#include <cstdint>

#include "initfree/bits.hpp"
#include "initfree/function_table.hpp"
#include "initfree/qstate.hpp"

namespace initfree {

enum class Register { control, aux };

/// |x> -> 2^{-n/2} sum_y (-1)^{x.y} |y> on the selected register. Involutive.
StateVector walsh_hadamard(const StateVector& state, Register reg);

/// |x> -> N^{-1/2} sum_y e^{2 pi i x y / N} |y>, evaluated as the dense
/// O(N^2) sum straight from the definition.
StateVector qft(const StateVector& state, Register reg);

/// Radix-2 FFT evaluation of the same transform. Agrees with qft() to
/// rounding; used where the dense loop dominates run time.
StateVector qft_fast(const StateVector& state, Register reg);

/// I (x) S_w with S_w = Z^{w_0} (x) ... (x) Z^{w_{m-1}}: aux basis |k> picks
/// up (-1)^{w.k}. Throws unless w.width() == n_aux.
StateVector phase_string(const StateVector& state, const BitString& w);

/// I (x) U_w with U_w |k> = e^{2 pi i w k / M} |-k mod M>.
/// Throws unless modulus == 2^n_aux and w < modulus.
StateVector phase_negate(const StateVector& state, std::uint64_t w, std::uint64_t modulus);

/// |x>|k> -> |x>|k xor f(x)>.
StateVector oracle_xor(const StateVector& state, const FunctionTable& f);

/// |x>|k> -> |x>|(k + f(x)) mod M>.
StateVector oracle_add(const StateVector& state, const FunctionTable& f, std::uint64_t modulus);

} // namespace initfree
