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

#include "initfree/instances.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace initfree {

SimonInstance make_simon(unsigned n, std::optional<BitString> h, SplitMix64& rng) {
    if (n < 2) throw std::invalid_argument("make_simon: n must be at least 2");
    if (n > kMaxBits) throw std::invalid_argument("make_simon: n too large");
    const std::uint64_t size = pow2(n);
    if (h) {
        if (h->width() != n) throw std::invalid_argument("make_simon: h width does not match n");
        if (h->is_zero()) throw std::invalid_argument("make_simon: h must be nonzero");
    } else {
        h = BitString(n, 1 + rng.below(size - 1));
    }

    std::vector<std::uint64_t> pool(size);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    shuffle(std::span(pool), rng);

    std::vector<std::uint64_t> values(size);
    std::size_t next = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        const std::uint64_t partner = x ^ h->value();
        if (partner < x) continue;
        values[x] = values[partner] = pool[next++];
    }
    return SimonInstance{n, *h, FunctionTable(n, n, std::move(values))};
}

bool satisfies_two_to_one(const FunctionTable& f, const BitString& h) {
    if (h.width() != f.domain_bits() || h.is_zero()) return false;
    const std::uint64_t size = f.domain_size();
    for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t y = x + 1; y < size; ++y) {
            const bool same = f(x) == f(y);
            const bool related = (x ^ y) == h.value();
            if (same != related) return false;
        }
    }
    return true;
}

SimonInstance simon_from_table(FunctionTable f) {
    const unsigned n = f.domain_bits();
    if (n < 2) throw std::invalid_argument("simon_from_table: need at least 2 domain bits");
    std::optional<BitString> h;
    for (std::uint64_t x = 1; x < f.domain_size(); ++x) {
        if (f(x) == f(0)) {
            h = BitString(n, x);
            break;
        }
    }
    if (!h || !satisfies_two_to_one(f, *h)) {
        throw std::invalid_argument("simon_from_table: table is not two-to-one under any hidden shift");
    }
    return SimonInstance{n, *h, std::move(f)};
}

PeriodicInstance make_periodic(unsigned n, unsigned m, std::uint64_t period, SplitMix64& rng) {
    if (period < 1) throw std::invalid_argument("make_periodic: period must be at least 1");
    if (period > pow2(m)) {
        throw std::invalid_argument("make_periodic: period " + std::to_string(period) + " exceeds 2^m = " +
                                    std::to_string(pow2(m)));
    }
    std::vector<std::uint64_t> pool(pow2(m));
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    shuffle(std::span(pool), rng);
    pool.resize(period);
    return make_periodic(n, m, pool);
}

PeriodicInstance make_periodic(unsigned n, unsigned m, const std::vector<std::uint64_t>& residues) {
    const std::uint64_t period = residues.size();
    if (period < 1) throw std::invalid_argument("make_periodic: empty residue table");
    if (period > pow2(m)) throw std::invalid_argument("make_periodic: period exceeds 2^m");
    if (period > pow2(n)) throw std::invalid_argument("make_periodic: period exceeds 2^n");
    std::unordered_set<std::uint64_t> seen(residues.begin(), residues.end());
    if (seen.size() != residues.size()) throw std::invalid_argument("make_periodic: residues not injective");
    std::vector<std::uint64_t> values(pow2(n));
    for (std::uint64_t x = 0; x < values.size(); ++x) values[x] = residues[x % period];
    return PeriodicInstance{n, m, period, FunctionTable(n, m, std::move(values))};
}

bool satisfies_periodic(const FunctionTable& f, std::uint64_t period) {
    const std::uint64_t size = f.domain_size();
    if (period < 1 || period > size) return false;
    for (std::uint64_t x = 0; x + period < size; ++x) {
        if (f(x) != f(x + period)) return false;
    }
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t x = 0; x < period; ++x) {
        if (!seen.insert(f(x)).second) return false;
    }
    return true;
}

PeriodicInstance periodic_from_table(FunctionTable f) {
    const std::uint64_t size = f.domain_size();
    for (std::uint64_t t = 1; t <= size; ++t) {
        bool repeats = true;
        for (std::uint64_t x = 0; x + t < size && repeats; ++x) repeats = f(x) == f(x + t);
        if (!repeats) continue;
        if (!satisfies_periodic(f, t) || t > pow2(f.codomain_bits())) {
            throw std::invalid_argument("periodic_from_table: f is not injective within its period");
        }
        return PeriodicInstance{f.domain_bits(), f.codomain_bits(), t, std::move(f)};
    }
    throw std::logic_error("periodic_from_table: unreachable");
}

std::uint64_t repetition_count(std::uint64_t N, std::uint64_t period, std::uint64_t x) {
    if (x >= N) return 0;
    return (N - x + period - 1) / period;
}

std::vector<BitString> orthogonal_subgroup(const BitString& h) {
    if (h.is_zero()) throw std::invalid_argument("orthogonal_subgroup: h must be nonzero");
    std::vector<BitString> out;
    out.reserve(pow2(h.width() - 1));
    for (std::uint64_t x = 0; x < pow2(h.width()); ++x) {
        if (dot(x, h.value()) == 0) out.emplace_back(h.width(), x);
    }
    return out;
}

std::int64_t centered_residue(std::uint64_t r, std::uint64_t N) noexcept {
    const auto rr = static_cast<std::int64_t>(r % N);
    const auto nn = static_cast<std::int64_t>(N);
    return 2 * rr > nn ? rr - nn : rr;
}

std::vector<std::uint64_t> good_y_set(std::uint64_t N, std::uint64_t period) {
    if (period < 1 || period > N) throw std::invalid_argument("good_y_set: need 1 <= T <= N");
    const auto t = static_cast<std::int64_t>(period);
    std::vector<std::uint64_t> out;
    for (std::uint64_t y = 0; y < N; ++y) {
        // |c| <= T/2  <=>  2|c| <= T, without halving odd T.
        const std::int64_t c = centered_residue((y * period) % N, N);
        if (2 * std::abs(c) <= t) out.push_back(y);
    }
    return out;
}

} // namespace initfree
