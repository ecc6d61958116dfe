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
#include <optional>
#include <vector>

#include "initfree/bits.hpp"
#include "initfree/function_table.hpp"
#include "initfree/rng.hpp"

namespace initfree {

/// Two-to-one f on (Z_2^n, xor): f(x) == f(y) iff x ^ y in {0, h}.
struct SimonInstance {
    unsigned n;
    BitString h;
    FunctionTable f;
};

/// f : Z_{2^n} -> Z_{2^m} with f(x) = g(x mod T), g injective on [0, T).
struct PeriodicInstance {
    unsigned n;
    unsigned m;
    std::uint64_t period;
    FunctionTable f;

    std::uint64_t domain_size() const noexcept { return pow2(n); }
    std::uint64_t modulus() const noexcept { return pow2(m); }
};

/// Random two-to-one function with hidden shift `h` (random nonzero if
/// absent). Each coset {x, x^h} gets a distinct value drawn from a shuffled
/// list of the 2^n codomain values, visiting cosets by minimum element.
SimonInstance make_simon(unsigned n, std::optional<BitString> h, SplitMix64& rng);

/// Wraps an explicit table, recovering h and checking the promise. Throws
/// std::invalid_argument if the table is not two-to-one under some h.
SimonInstance simon_from_table(FunctionTable f);

/// True iff f(x) == f(y) exactly when x ^ y is 0 or h. O(4^n) pair scan.
bool satisfies_two_to_one(const FunctionTable& f, const BitString& h);

/// Random periodic function: g is a sample without replacement from Z_{2^m}.
PeriodicInstance make_periodic(unsigned n, unsigned m, std::uint64_t period, SplitMix64& rng);

/// f(x) = residues[x mod T] with T = residues.size().
PeriodicInstance make_periodic(unsigned n, unsigned m, const std::vector<std::uint64_t>& residues);

/// Wraps an explicit table, taking T as the smallest shift under which the
/// table repeats. Throws if f is not injective on [0, T).
PeriodicInstance periodic_from_table(FunctionTable f);

/// f(x) == f(x + T) whenever x + T < N, and f injective on [0, T).
bool satisfies_periodic(const FunctionTable& f, std::uint64_t period);

/// Number of x' in [0, N) congruent to x mod T: ceil((N - x) / T).
std::uint64_t repetition_count(std::uint64_t N, std::uint64_t period, std::uint64_t x);

/// {x : x.h = 0}, ascending. Size 2^(n-1).
std::vector<BitString> orthogonal_subgroup(const BitString& h);

/// Signed representative of r mod N in (-N/2, N/2].
std::int64_t centered_residue(std::uint64_t r, std::uint64_t N) noexcept;

/// {y in [0, N) : -T/2 <= centered(yT mod N) <= T/2}, ascending. Ties at
/// exactly +-T/2 are included.
std::vector<std::uint64_t> good_y_set(std::uint64_t N, std::uint64_t period);

} // namespace initfree
